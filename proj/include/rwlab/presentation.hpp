#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphabet.hpp"
#include "word.hpp"

namespace rwlab {

  //! Records that a rule was obtained by substituting \c value for the
  //! variable of the schema named \c schema.
  struct SchemaInstance {
    std::string schema;
    Word        value;

    bool operator==(SchemaInstance const&) const = default;
  };

  //! An oriented replacement pair lhs -> rhs.
  struct Rule {
    std::string                   name;
    Word                          lhs;
    Word                          rhs;
    std::optional<SchemaInstance> instance_of;

    bool operator==(Rule const&) const = default;
  };

  //! Rules are shared between presentations, edges and redexes.
  using RulePtr = std::shared_ptr<Rule const>;

  //! A family of rules
  //!
  //!     lhs_prefix v lhs_suffix -> rhs_prefix v rhs_suffix
  //!
  //! indexed by words v over a sub-alphabet.  The variable sits at the same
  //! offset on both sides (|lhs_prefix| == |rhs_prefix|).
  class RuleSchema {
   public:
    RuleSchema(std::string        name,
               std::string        variable,
               std::vector<Letter> range,
               Word               lhs_prefix,
               Word               lhs_suffix,
               Word               rhs_prefix,
               Word               rhs_suffix);

    std::string const& name() const noexcept {
      return name_;
    }
    std::string const& variable() const noexcept {
      return variable_;
    }
    std::vector<Letter> const& range() const noexcept {
      return range_;
    }
    bool in_range(Letter x) const noexcept;
    bool accepts(Word const& v) const;

    Word const& lhs_prefix() const noexcept {
      return lhs_prefix_;
    }
    Word const& lhs_suffix() const noexcept {
      return lhs_suffix_;
    }
    Word const& rhs_prefix() const noexcept {
      return rhs_prefix_;
    }
    Word const& rhs_suffix() const noexcept {
      return rhs_suffix_;
    }

    Word lhs(Word const& v) const {
      return lhs_prefix_ + v + lhs_suffix_;
    }
    Word rhs(Word const& v) const {
      return rhs_prefix_ + v + rhs_suffix_;
    }

    bool operator==(RuleSchema const&) const = default;

   private:
    std::string         name_;
    std::string         variable_;
    std::vector<Letter> range_;
    std::vector<bool>   range_mask_;
    Word                lhs_prefix_, lhs_suffix_, rhs_prefix_, rhs_suffix_;
  };

  //! Shortlex (length-plus-lexicographic) ordering.  precedence lists every
  //! letter once, greatest first.
  class OrderingSpec {
   public:
    OrderingSpec() = default;
    OrderingSpec(std::vector<Letter> precedence, std::size_t alphabet_size);

    std::vector<Letter> const& precedence() const noexcept {
      return precedence_;
    }

    //! Larger rank means greater letter.
    std::size_t rank(Letter x) const {
      return rank_[x];
    }

    bool operator==(OrderingSpec const&) const = default;

   private:
    std::vector<Letter>      precedence_;
    std::vector<std::size_t> rank_;
  };

  //! Substitutes \p v for the schema variable.  The instance is named
  //! `name[v]`.  Throws Error if \p v leaves the variable range.
  Rule instantiate_schema(RuleSchema const& s,
                          Word const&       v,
                          Alphabet const&   alphabet);

  //! A validated monoid presentation: alphabet, plain rules, rule schemas
  //! and an optional shortlex ordering.  Immutable once built.
  class Presentation {
   public:
    //! Throws Error on a letter outside the alphabet, a duplicated rule or
    //! schema name, a rule with lhs == rhs, or a symmetric pair of rules.
    Presentation(Alphabet                     alphabet,
                 std::vector<Rule>            rules,
                 std::vector<RuleSchema>      schemas  = {},
                 std::optional<OrderingSpec>  ordering = std::nullopt);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::vector<RulePtr> const& rules() const noexcept {
      return rules_;
    }
    std::vector<RuleSchema> const& schemas() const noexcept {
      return schemas_;
    }
    std::optional<OrderingSpec> const& ordering() const noexcept {
      return ordering_;
    }

    //! The ordering if one was given, otherwise declaration order.
    OrderingSpec const& effective_ordering() const noexcept {
      return effective_ordering_;
    }

    RulePtr find_rule(std::string_view name) const;
    RuleSchema const* find_schema(std::string_view name) const;

    //! True if an ordering is declared and it orients every rule and every
    //! instance of every schema from left to right.
    bool orientable() const noexcept {
      return orientable_;
    }

    //! Indices into rules() of the plain rules whose lhs starts with \p x,
    //! in declaration order.
    std::vector<std::uint32_t> const& rules_starting_with(Letter x) const {
      return by_first_letter_[x];
    }

    //! Indices of plain rules with an empty lhs.
    std::vector<std::uint32_t> const& rules_with_empty_lhs() const noexcept {
      return empty_lhs_;
    }

    //! A copy with \p rules replacing the plain rules.
    Presentation with_rules(std::vector<Rule> rules) const;

    bool operator==(Presentation const& that) const;

   private:
    Alphabet                                alphabet_;
    std::vector<RulePtr>                    rules_;
    std::vector<RuleSchema>                 schemas_;
    std::optional<OrderingSpec>             ordering_;
    OrderingSpec                            effective_ordering_;
    bool                                    orientable_ = false;
    std::vector<std::vector<std::uint32_t>> by_first_letter_;
    std::vector<std::uint32_t>              empty_lhs_;
  };

  //! Reads the line-oriented presentation format:
  //!
  //!     letters <tok> ...
  //!     inverse <tok> <tok>
  //!     order <tok> ...                      (greatest first)
  //!     rule <name> : <tok>* -> <tok>*
  //!     schema <name> ( <var> : <tok>+ ) : <seq> -> <seq>
  //!
  //! `#` starts a comment.  Throws ParseError.
  Presentation parse_presentation(std::string_view text);

  //! Inverse of parse_presentation.
  std::string print_presentation(Presentation const& p);

}  // namespace rwlab
