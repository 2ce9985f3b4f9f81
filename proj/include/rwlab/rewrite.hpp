#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "sign.hpp"
#include "word.hpp"

namespace rwlab {

  //! An occurrence of a rule's lhs.  For a schema match, rule is the
  //! instance and carries instance_of.
  struct Redex {
    std::size_t position;
    RulePtr     rule;

    std::size_t matched_length() const noexcept {
      return rule->lhs.size();
    }
  };

  //! Shortlex comparison; letters earlier in the precedence are greater.
  std::strong_ordering compare_shortlex(Word const&         u,
                                        Word const&         v,
                                        OrderingSpec const& o);

  //! Function object for sorting words in ascending shortlex order.
  struct ShortlexLess {
    OrderingSpec const* ordering;

    bool operator()(Word const& u, Word const& v) const {
      return compare_shortlex(u, v, *ordering) == std::strong_ordering::less;
    }
  };

  //! Every match of a plain rule or a schema in \p w, sorted by position;
  //! within a position plain rules come first, then schemas, each in
  //! declaration order.  A schema contributes only its shortest variable
  //! instantiation at each position.
  std::vector<Redex> find_redexes(Word const& w, Presentation const& p);

  //! True if no rule or schema matches anywhere in \p w.
  bool is_irreducible(Word const& w, Presentation const& p);

  //! Replaces the lhs of r.rule at r.position by its rhs (sign plus) or the
  //! rhs by the lhs (sign minus).  Throws Error if the side is not there.
  Word rewrite_at(Word const& w, Redex const& r, Sign sign = Sign::plus);

  struct NormalizeOptions {
    //! Refuse presentations whose ordering does not orient every rule.
    bool        require_orientation = true;
    std::size_t max_steps           = 1'000'000;
  };

  struct ReductionStep {
    std::size_t position;
    RulePtr     rule;
    Word        result;
  };

  //! A positive rewriting sequence start ->* result.
  struct Reduction {
    Word                       start;
    std::vector<ReductionStep> steps;
    Word                       result;
  };

  //! Repeatedly rewrites the leftmost redex.  Throws Error
  //! "not orientable; termination not guaranteed" unless the presentation
  //! is orientable or the check is disabled, and Error when max_steps is
  //! exceeded.
  Word normalize(Word const&         w,
                 Presentation const& p,
                 NormalizeOptions    opts = {});

  //! As normalize, but records every step.
  Reduction reduce(Word const&         w,
                   Presentation const& p,
                   NormalizeOptions    opts = {});

  //! One line per step: `<word> --<rule>@<pos>--> <word>`.
  std::string format_reduction(Reduction const& r, Alphabet const& alphabet);

  //! All irreducible words of length at most \p max_len in ascending
  //! shortlex order.
  std::vector<Word> enumerate_normal_forms(Presentation const& p,
                                           std::size_t         max_len,
                                           NormalizeOptions    opts = {});

}  // namespace rwlab
