#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sign.hpp"
#include "word.hpp"

namespace rwlab {

  //! Letters of the built-in case-study presentations, which all declare
  //! their tokens in the order a a' b b' h z.
  namespace letters {
    inline constexpr Letter a     = 0;
    inline constexpr Letter a_inv = 1;
    inline constexpr Letter b     = 2;
    inline constexpr Letter b_inv = 3;
    inline constexpr Letter h     = 4;
    inline constexpr Letter z     = 5;

    //! The group letters a a' b b'.
    inline constexpr std::array<Letter, 4> group = {a, a_inv, b, b_inv};

    //! a for plus, a' for minus.
    constexpr Letter a_pow(Sign e) noexcept {
      return e == Sign::plus ? a : a_inv;
    }
    //! b for plus, b' for minus.
    constexpr Letter b_pow(Sign e) noexcept {
      return e == Sign::plus ? b : b_inv;
    }
    //! The formal inverse of a group letter.
    constexpr Letter inv(Letter x) noexcept {
      return static_cast<Letter>(x ^ 1);
    }
    constexpr bool is_a_letter(Letter x) noexcept {
      return x == a || x == a_inv;
    }
    //! +1 for a and b, -1 for a' and b'.
    constexpr Sign exponent(Letter x) noexcept {
      return (x & 1) == 0 ? Sign::plus : Sign::minus;
    }
  }  // namespace letters

  //! The seven families of critical circuits of the case study.
  enum class CtFamily { ct1 = 1, ct2, ct3, ct4, ct5, ct6, ct7 };

  inline constexpr std::array<CtFamily, 7> all_ct_families = {CtFamily::ct1,
                                                              CtFamily::ct2,
                                                              CtFamily::ct3,
                                                              CtFamily::ct4,
                                                              CtFamily::ct5,
                                                              CtFamily::ct6,
                                                              CtFamily::ct7};

  //! "CT1" ... "CT7".
  std::string format_family(CtFamily f);

  //! Accepts "CT1".."CT7" (any case) or "1".."7".  Throws Error.
  CtFamily parse_family(std::string const& text);

  //! Parameters of a circuit family.  Slots a family does not use are
  //! ignored:
  //!
  //! - CT1: x, w1, w2, eps, delta
  //! - CT2, CT6: x
  //! - CT3, CT4: w, eps, delta
  //! - CT5: x, w, eps, delta
  //! - CT7: w1, eps1, delta1, w2, eps2, delta2
  //!
  //! x is a group letter and the words are over the group letters.
  struct CtParams {
    CtFamily family = CtFamily::ct1;
    Letter   x      = letters::a;
    Word     w, w1, w2;
    Sign     eps    = Sign::plus;
    Sign     delta  = Sign::plus;
    Sign     eps1   = Sign::plus;
    Sign     delta1 = Sign::plus;
    Sign     eps2   = Sign::plus;
    Sign     delta2 = Sign::plus;

    bool operator==(CtParams const&) const = default;
  };

  //! Throws Error if x or a word slot uses a letter other than a a' b b'.
  void validate(CtParams const& params);

  //! Compact rendering of the slots the family uses, e.g.
  //! `CT1(x=a,w1=ε,w2=b,ε=+1,δ=-1)`.
  std::string format_params(CtParams const& params);

  //! Calls \p f on every parameter tuple of \p family whose word slots
  //! have length at most \p max_word_len, in a fixed order.
  void for_each_ct_params(CtFamily                              family,
                          std::size_t                           max_word_len,
                          std::function<void(CtParams const&)> const& f);

}  // namespace rwlab
