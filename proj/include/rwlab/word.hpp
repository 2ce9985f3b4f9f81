#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rwlab {

  //! A letter is an index into an Alphabet.
  using Letter = char8_t;

  //! A word over an alphabet: a string of letter indices.  Using a string
  //! type keeps the short words that dominate this library in the
  //! small-buffer storage.
  using Word = std::basic_string<Letter>;

  inline Word operator*(Word const& u, Word const& v) {
    return u + v;
  }

  //! Number of occurrences of \p x in \p w.
  std::size_t count(Word const& w, Letter x);

  //! True if every letter of \p w is in \p letters.
  bool is_over(Word const& w, std::span<Letter const> letters);

  //! All words over \p letters of length at most \p max_len, ordered by
  //! length and then lexicographically by position in \p letters.
  std::vector<Word> all_words(std::span<Letter const> letters,
                              std::size_t max_len);

}  // namespace rwlab
