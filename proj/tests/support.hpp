#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "rwlab/casestudy.hpp"
#include "rwlab/ring.hpp"

namespace rwlab::testing {

  //! Parses a word over the letters of a built-in presentation.
  inline Word word(std::string const& text, std::string_view p = "Qbar") {
    return preset(p)->alphabet().parse_word(text);
  }

  inline std::string show(Word const& w, std::string_view p = "Qbar") {
    return preset(p)->alphabet().format(w);
  }

  inline std::string show(RingElement const& x) {
    return format_ring(x);
  }

  //! A word over \p letters with length uniform in [0, max_len].
  inline Word random_word(std::mt19937_64&     rng,
                          std::span<Letter const> letters,
                          std::size_t          max_len) {
    Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng), 0);
    for (auto& x : w) {
      x = letters[rng() % letters.size()];
    }
    return w;
  }

  inline std::vector<Letter> group_letters() {
    return {letters::group.begin(), letters::group.end()};
  }

  inline std::vector<Letter> monoid_letters() {
    return preset("Q")->alphabet().letters();
  }

}  // namespace rwlab::testing
