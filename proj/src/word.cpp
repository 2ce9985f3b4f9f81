#include "rwlab/word.hpp"

#include <algorithm>

namespace rwlab {

  std::size_t count(Word const& w, Letter x) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  }

  bool is_over(Word const& w, std::span<Letter const> letters) {
    return std::all_of(w.begin(), w.end(), [&letters](Letter x) {
      return std::find(letters.begin(), letters.end(), x) != letters.end();
    });
  }

  std::vector<Word> all_words(std::span<Letter const> letters,
                              std::size_t             max_len) {
    std::vector<Word> result{Word()};
    std::size_t       level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const level_end = result.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (Letter x : letters) {
          result.push_back(result[i] + x);
        }
      }
      level_begin = level_end;
    }
    return result;
  }

}  // namespace rwlab
