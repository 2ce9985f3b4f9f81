#pragma once

#include <string>
#include <string_view>

namespace rwlab {

  //! Orientation of an edge, or an exponent ±1.
  enum class Sign : int { plus = 1, minus = -1 };

  constexpr int to_int(Sign s) noexcept {
    return static_cast<int>(s);
  }

  constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::plus ? Sign::minus : Sign::plus;
  }

  constexpr Sign operator*(Sign s, Sign t) noexcept {
    return s == t ? Sign::plus : Sign::minus;
  }

  //! "+1" or "-1".
  inline std::string format_sign(Sign s) {
    return s == Sign::plus ? "+1" : "-1";
  }

  //! Accepts "+1", "1", "+", "-1", "-" and "−1".  Throws Error otherwise.
  Sign parse_sign(std::string_view text);

  inline constexpr Sign both_signs[] = {Sign::plus, Sign::minus};

}  // namespace rwlab
