#include "rwlab/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "rwlab/error.hpp"

namespace rwlab {

  Sign parse_sign(std::string_view text) {
    if (text == "+1" || text == "1" || text == "+") {
      return Sign::plus;
    }
    if (text == "-1" || text == "-" || text == "−1" || text == "−") {
      return Sign::minus;
    }
    throw Error("expected +1 or -1, found \"" + std::string(text) + "\"");
  }

  std::strong_ordering compare_shortlex(Word const&         u,
                                        Word const&         v,
                                        OrderingSpec const& o) {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return o.rank(u[i]) <=> o.rank(v[i]);
      }
    }
    return std::strong_ordering::equal;
  }

  namespace {
    bool occurs_at(Word const& w, std::size_t i, Word const& x) {
      return w.size() - i >= x.size() && w.compare(i, x.size(), x) == 0;
    }

    // Length of the shortest value of the variable for which s matches w at
    // position i.
    std::optional<std::size_t> match_schema(Word const&       w,
                                            std::size_t       i,
                                            RuleSchema const& s) {
      auto const& prefix = s.lhs_prefix();
      auto const& suffix = s.lhs_suffix();
      if (!occurs_at(w, i, prefix)) {
        return std::nullopt;
      }
      std::size_t const start = i + prefix.size();
      for (std::size_t j = start;; ++j) {
        if (w.size() - j < suffix.size()) {
          return std::nullopt;
        }
        if (w.compare(j, suffix.size(), suffix) == 0) {
          return j - start;
        }
        if (!s.in_range(w[j])) {
          return std::nullopt;
        }
      }
    }

    // A match without an allocated rule instance: rule indexes p.rules()
    // or, if schema is set, p.schemas() with a variable of length var_len.
    struct Match {
      std::size_t position;
      std::size_t index;
      bool        schema;
      std::size_t var_len;
    };

    // Calls f(match) for each match at position i in enumeration order
    // until f returns true.
    template <typename F>
    bool for_each_match_at(Word const&         w,
                           std::size_t         i,
                           Presentation const& p,
                           F&&                 f) {
      auto const& rules = p.rules();
      auto const& empty = p.rules_with_empty_lhs();
      static std::vector<std::uint32_t> const none;
      auto const& first = i < w.size() ? p.rules_starting_with(w[i]) : none;
      auto        it1 = first.begin();
      auto        it2 = empty.begin();
      while (it1 != first.end() || it2 != empty.end()) {
        std::uint32_t k;
        if (it2 == empty.end() || (it1 != first.end() && *it1 < *it2)) {
          k = *it1++;
        } else {
          k = *it2++;
        }
        if (occurs_at(w, i, rules[k]->lhs) && f(Match{i, k, false, 0})) {
          return true;
        }
      }
      auto const& schemas = p.schemas();
      for (std::size_t k = 0; k < schemas.size(); ++k) {
        if (auto n = match_schema(w, i, schemas[k]);
            n && f(Match{i, k, true, *n})) {
          return true;
        }
      }
      return false;
    }

    std::optional<Match> first_match(Word const& w, Presentation const& p) {
      std::optional<Match> result;
      for (std::size_t i = 0; i <= w.size(); ++i) {
        if (for_each_match_at(w, i, p, [&result](Match const& m) {
              result = m;
              return true;
            })) {
          return result;
        }
      }
      return std::nullopt;
    }

    Word schema_value(Word const& w, Match const& m, RuleSchema const& s) {
      return w.substr(m.position + s.lhs_prefix().size(), m.var_len);
    }

    RulePtr rule_of(Word const& w, Match const& m, Presentation const& p) {
      if (!m.schema) {
        return p.rules()[m.index];
      }
      auto const& s = p.schemas()[m.index];
      return std::make_shared<Rule const>(
          instantiate_schema(s, schema_value(w, m, s), p.alphabet()));
    }

    // Rewrites the match in place.
    void apply(Word& w, Match const& m, Presentation const& p) {
      if (!m.schema) {
        auto const& r = *p.rules()[m.index];
        w.replace(m.position, r.lhs.size(), r.rhs);
        return;
      }
      auto const& s = p.schemas()[m.index];
      // The variable is at the same offset on both sides.
      w.replace(m.position + s.lhs_prefix().size() + m.var_len,
                s.lhs_suffix().size(),
                s.rhs_suffix());
      w.replace(m.position, s.lhs_prefix().size(), s.rhs_prefix());
    }

    void check_orientation(Presentation const& p, NormalizeOptions const& o) {
      if (o.require_orientation && !p.orientable()) {
        throw Error("not orientable; termination not guaranteed");
      }
    }

    [[noreturn]] void too_many_steps(NormalizeOptions const& o) {
      throw Error("normalization exceeded " + std::to_string(o.max_steps)
                  + " steps");
    }
  }  // namespace

  std::vector<Redex> find_redexes(Word const& w, Presentation const& p) {
    std::vector<Redex> result;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      for_each_match_at(w, i, p, [&](Match const& m) {
        result.push_back(Redex{i, rule_of(w, m, p)});
        return false;
      });
    }
    return result;
  }

  bool is_irreducible(Word const& w, Presentation const& p) {
    return !first_match(w, p).has_value();
  }

  Word rewrite_at(Word const& w, Redex const& r, Sign sign) {
    if (!r.rule) {
      throw Error("invalid redex: no rule");
    }
    Word const& from = sign == Sign::plus ? r.rule->lhs : r.rule->rhs;
    Word const& to   = sign == Sign::plus ? r.rule->rhs : r.rule->lhs;
    if (r.position > w.size() || !occurs_at(w, r.position, from)) {
      throw Error("invalid redex: rule " + r.rule->name
                  + " does not match at position "
                  + std::to_string(r.position));
    }
    Word result = w;
    result.replace(r.position, from.size(), to);
    return result;
  }

  Word normalize(Word const& w, Presentation const& p, NormalizeOptions opts) {
    check_orientation(p, opts);
    Word        result = w;
    std::size_t steps  = 0;
    while (auto m = first_match(result, p)) {
      if (++steps > opts.max_steps) {
        too_many_steps(opts);
      }
      apply(result, *m, p);
    }
    return result;
  }

  Reduction reduce(Word const& w, Presentation const& p, NormalizeOptions opts) {
    check_orientation(p, opts);
    Reduction r{w, {}, w};
    while (auto m = first_match(r.result, p)) {
      if (r.steps.size() >= opts.max_steps) {
        too_many_steps(opts);
      }
      RulePtr rule = rule_of(r.result, *m, p);
      apply(r.result, *m, p);
      r.steps.push_back({m->position, std::move(rule), r.result});
    }
    return r;
  }

  std::string format_reduction(Reduction const& r, Alphabet const& alphabet) {
    std::ostringstream out;
    Word const*        current = &r.start;
    for (auto const& s : r.steps) {
      out << alphabet.format(*current) << " --" << s.rule->name << '@'
          << s.position << "--> " << alphabet.format(s.result) << '\n';
      current = &s.result;
    }
    return out.str();
  }

  std::vector<Word> enumerate_normal_forms(Presentation const& p,
                                           std::size_t         max_len,
                                           NormalizeOptions    opts) {
    check_orientation(p, opts);
    // Factors of irreducible words are irreducible, so it suffices to
    // extend the irreducible words of each length by one letter.
    std::vector<Word> result;
    if (is_irreducible(Word(), p)) {
      result.emplace_back();
    }
    std::size_t level_begin = 0;
    auto const  letters     = p.alphabet().letters();
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const level_end = result.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (Letter x : letters) {
          Word w = result[i] + x;
          if (is_irreducible(w, p)) {
            result.push_back(std::move(w));
          }
        }
      }
      level_begin = level_end;
    }
    std::sort(result.begin(),
              result.end(),
              ShortlexLess{&p.effective_ordering()});
    return result;
  }

}  // namespace rwlab
