#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "word.hpp"

namespace rwlab {

  //! The rendering of the empty word, in files and in output.
  inline constexpr std::string_view empty_word_token = "ε";

  //! An ordered list of distinct letter tokens, with an optional involution
  //! pairing letters with their formal inverses.
  class Alphabet {
   public:
    Alphabet() = default;

    //! Throws Error if a token is repeated or malformed, if a pair names an
    //! undeclared token, pairs a letter with itself, or conflicts with an
    //! earlier pair.
    explicit Alphabet(
        std::vector<std::string>                            tokens,
        std::vector<std::pair<std::string, std::string>> const& inverse_pairs
        = {});

    std::size_t size() const noexcept {
      return tokens_.size();
    }

    std::vector<std::string> const& tokens() const noexcept {
      return tokens_;
    }

    std::string const& token(Letter x) const;

    std::optional<Letter> find(std::string_view token) const;

    //! Like find, but throws Error for an undeclared token.
    Letter letter(std::string_view token) const;

    std::optional<Letter> inverse(Letter x) const;

    //! Every letter of the alphabet, in declaration order.
    std::vector<Letter> letters() const;

    //! Whitespace-separated tokens; "ε" or blank text is the empty word.
    //! A token of the form `x⁻¹` or `x^-1` names the formal inverse of `x`
    //! when no such token is declared.
    Word parse_word(std::string_view text) const;

    //! Tokens joined by single spaces, "ε" for the empty word.
    std::string format(Word const& w) const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<std::string>          tokens_;
    std::vector<std::optional<Letter>> inverse_;
  };

  //! The reversed word with every letter replaced by its formal inverse.
  //! Throws Error if a letter has no declared inverse.
  Word formal_inverse(Word const& w, Alphabet const& alphabet);

  //! Splits on ASCII whitespace.
  std::vector<std::string> split_tokens(std::string_view text);

}  // namespace rwlab
