#include "rwlab/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "rwlab/error.hpp"

namespace rwlab {

  namespace {
    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    void check_token(std::string const& t) {
      if (t.empty()) {
        throw Error("empty letter token");
      }
      if (t == empty_word_token) {
        throw Error("the token \"ε\" is reserved for the empty word");
      }
      if (std::any_of(t.begin(), t.end(), is_space)) {
        throw Error("letter token \"" + t + "\" contains whitespace");
      }
      if (t.find_first_of("()") != std::string::npos || t == ":" || t == "->"
          || t == "#") {
        throw Error("letter token \"" + t + "\" is reserved syntax");
      }
    }

    // Recognises `x⁻¹` and `x^-1`; returns the base token or an empty view.
    std::string_view inverse_base(std::string_view t) {
      for (std::string_view suffix : {std::string_view("⁻¹"),
                                       std::string_view("^-1")}) {
        if (t.size() > suffix.size() && t.ends_with(suffix)) {
          return t.substr(0, t.size() - suffix.size());
        }
      }
      return {};
    }
  }  // namespace

  std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> result;
    std::size_t              i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) {
        ++j;
      }
      if (j > i) {
        result.emplace_back(text.substr(i, j - i));
      }
      i = j;
    }
    return result;
  }

  Alphabet::Alphabet(
      std::vector<std::string>                                tokens,
      std::vector<std::pair<std::string, std::string>> const& inverse_pairs)
      : tokens_(std::move(tokens)), inverse_(tokens_.size()) {
    if (tokens_.size() > 255) {
      throw Error("too many letters (at most 255 are supported)");
    }
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      check_token(tokens_[i]);
      if (std::find(tokens_.begin(), tokens_.begin() + i, tokens_[i])
          != tokens_.begin() + i) {
        throw Error("duplicate letter \"" + tokens_[i] + "\"");
      }
    }
    for (auto const& [s, t] : inverse_pairs) {
      Letter x = letter(s);
      Letter y = letter(t);
      if (x == y) {
        throw Error("letter \"" + s + "\" cannot be its own formal inverse");
      }
      if ((inverse_[x] && *inverse_[x] != y)
          || (inverse_[y] && *inverse_[y] != x)) {
        throw Error("conflicting inverse declaration for \"" + s + "\", \""
                    + t + "\"");
      }
      inverse_[x] = y;
      inverse_[y] = x;
    }
  }

  std::string const& Alphabet::token(Letter x) const {
    if (x >= tokens_.size()) {
      throw Error("letter index " + std::to_string(x) + " out of range");
    }
    return tokens_[x];
  }

  std::optional<Letter> Alphabet::find(std::string_view token) const {
    auto it = std::find(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end()) {
      return std::nullopt;
    }
    return static_cast<Letter>(it - tokens_.begin());
  }

  Letter Alphabet::letter(std::string_view token) const {
    if (auto x = find(token)) {
      return *x;
    }
    if (auto base = inverse_base(token); !base.empty()) {
      if (auto x = find(base); x && inverse_[*x]) {
        return *inverse_[*x];
      }
    }
    throw Error("undeclared letter \"" + std::string(token) + "\"");
  }

  std::optional<Letter> Alphabet::inverse(Letter x) const {
    return x < inverse_.size() ? inverse_[x] : std::nullopt;
  }

  std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> result(tokens_.size());
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = static_cast<Letter>(i);
    }
    return result;
  }

  Word Alphabet::parse_word(std::string_view text) const {
    auto tokens = split_tokens(text);
    if (tokens.size() == 1 && tokens[0] == empty_word_token) {
      return {};
    }
    Word w;
    for (auto const& t : tokens) {
      if (t == empty_word_token) {
        throw Error("\"ε\" must appear alone");
      }
      w.push_back(letter(t));
    }
    return w;
  }

  std::string Alphabet::format(Word const& w) const {
    if (w.empty()) {
      return std::string(empty_word_token);
    }
    std::string result;
    for (Letter x : w) {
      if (!result.empty()) {
        result += ' ';
      }
      result += token(x);
    }
    return result;
  }

  Word formal_inverse(Word const& w, Alphabet const& alphabet) {
    Word result(w.rbegin(), w.rend());
    for (Letter& x : result) {
      auto y = alphabet.inverse(x);
      if (!y) {
        throw Error("letter \"" + alphabet.token(x)
                    + "\" has no formal inverse");
      }
      x = *y;
    }
    return result;
  }

}  // namespace rwlab
