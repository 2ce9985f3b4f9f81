#include "rwlab/completion.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "rwlab/error.hpp"

namespace rwlab {

  ////////////////////////////////////////////////////////////////////////
  // Critical peaks
  ////////////////////////////////////////////////////////////////////////

  std::vector<RulePtr> rule_instances(Presentation const& p,
                                      std::size_t         schema_var_bound) {
    std::vector<RulePtr>            result;
    std::set<std::pair<Word, Word>> seen;
    for (auto const& r : p.rules()) {
      if (seen.emplace(r->lhs, r->rhs).second) {
        result.push_back(r);
      }
    }
    for (auto const& s : p.schemas()) {
      for (Word const& v : all_words(s.range(), schema_var_bound)) {
        auto r = std::make_shared<Rule const>(
            instantiate_schema(s, v, p.alphabet()));
        if (seen.emplace(r->lhs, r->rhs).second) {
          result.push_back(std::move(r));
        }
      }
    }
    return result;
  }

  std::vector<CriticalPeak> critical_peaks(std::vector<RulePtr> const& rules,
                                           OrderingSpec const&         order) {
    std::vector<CriticalPeak> result;
    using Site = std::pair<std::size_t, std::string>;
    std::set<std::tuple<Word, Site, Site>> seen;

    auto add = [&](CriticalPeak&& k) {
      Site s1{k.position1, k.rule1->name};
      Site s2{k.position2, k.rule2->name};
      if (s2 < s1) {
        std::swap(s1, s2);
      }
      if (seen.emplace(k.source, std::move(s1), std::move(s2)).second) {
        result.push_back(std::move(k));
      }
    };

    for (std::size_t i = 0; i < rules.size(); ++i) {
      Rule const& r1 = *rules[i];
      Word const& l1 = r1.lhs;
      if (l1.empty()) {
        continue;
      }
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Rule const& r2 = *rules[j];
        Word const& l2 = r2.lhs;
        if (l2.empty()) {
          continue;
        }
        if (i != j && l1.size() <= l2.size()) {
          for (std::size_t pos = 0; pos + l1.size() <= l2.size(); ++pos) {
            if (l2.compare(pos, l1.size(), l1) == 0) {
              Word g1 = l2.substr(0, pos);
              Word g2 = l2.substr(pos + l1.size());
              Word r  = g1 + r1.rhs + g2;
              add(CriticalPeak{PeakKind::inclusion,
                               rules[i],
                               rules[j],
                               std::move(g1),
                               std::move(g2),
                               l2,
                               pos,
                               0,
                               std::move(r),
                               r2.rhs});
            }
          }
        }
        for (std::size_t k = 1; k < l1.size(); ++k) {
          std::size_t const tail = l1.size() - k;
          if (tail < l2.size() && l1.compare(k, tail, l2, 0, tail) == 0) {
            Word g1 = l2.substr(tail);
            Word g2 = l1.substr(0, k);
            add(CriticalPeak{PeakKind::overlap,
                             rules[i],
                             rules[j],
                             g1,
                             g2,
                             l1 + g1,
                             0,
                             k,
                             r1.rhs + g1,
                             g2 + r2.rhs});
          }
        }
      }
    }
    std::stable_sort(result.begin(),
                     result.end(),
                     [&order](CriticalPeak const& x, CriticalPeak const& y) {
                       return compare_shortlex(x.source, y.source, order)
                              == std::strong_ordering::less;
                     });
    return result;
  }

  std::vector<CriticalPeak> critical_peaks(Presentation const& p,
                                           std::size_t schema_var_bound) {
    return critical_peaks(rule_instances(p, schema_var_bound),
                          p.effective_ordering());
  }

  PeakResolution resolve_peak(CriticalPeak const& k,
                              Presentation const& p,
                              NormalizeOptions    opts) {
    Reduction left  = reduce(k.result1, p, opts);
    Reduction right = reduce(k.result2, p, opts);
    if (left.result == right.result) {
      return CriticalCircuit{k, std::move(left), std::move(right)};
    }
    return UnresolvedPeak{k, std::move(left.result), std::move(right.result)};
  }

  std::string format_peak(CriticalPeak const& k, Alphabet const& alphabet) {
    return alphabet.format(k.source) + " [" + k.rule1->name + ","
           + k.rule2->name + "]";
  }

  std::size_t ConfluenceReport::unresolved_count() const {
    return static_cast<std::size_t>(
        std::count_if(peaks.begin(), peaks.end(), [](PeakResolution const& r) {
          return std::holds_alternative<UnresolvedPeak>(r);
        }));
  }

  ConfluenceReport is_confluent_bounded(Presentation const& p,
                                        std::size_t         schema_var_bound,
                                        NormalizeOptions    opts) {
    ConfluenceReport report;
    for (auto const& k : critical_peaks(p, schema_var_bound)) {
      report.peaks.push_back(resolve_peak(k, p, opts));
      if (std::holds_alternative<UnresolvedPeak>(report.peaks.back())) {
        report.confluent = false;
      }
    }
    return report;
  }

  std::string format_confluence_report(ConfluenceReport const& r,
                                       Alphabet const&         alphabet) {
    std::ostringstream out;
    for (auto const& res : r.peaks) {
      if (auto const* c = std::get_if<CriticalCircuit>(&res)) {
        out << "peak " << format_peak(c->peak, alphabet) << " -> resolved\n";
      } else {
        auto const& u = std::get<UnresolvedPeak>(res);
        out << "peak " << format_peak(u.peak, alphabet) << " -> UNRESOLVED("
            << alphabet.format(u.u) << "," << alphabet.format(u.v) << ")\n";
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Knuth-Bendix
  ////////////////////////////////////////////////////////////////////////

  KnuthBendixResult knuth_bendix(Presentation const& p,
                                 KnuthBendixOptions  opts) {
    if (!p.ordering()) {
      throw Error("knuth_bendix needs an ordering");
    }
    if (!p.orientable()) {
      throw Error("the ordering does not orient every initial rule");
    }
    OrderingSpec const& order = *p.ordering();
    std::vector<Rule>   rules;
    for (auto const& r : p.rules()) {
      rules.push_back(*r);
    }
    auto build = [&]() {
      return Presentation(p.alphabet(), rules, p.schemas(), p.ordering());
    };
    Presentation      current = p;
    KnuthBendixReport report{CompletionStatus::bounded_out, {}, 0, {}};
    std::size_t       next_id = 1;
    auto              fresh_name = [&]() {
      std::string name;
      do {
        name = "N" + std::to_string(next_id++);
      } while (current.find_rule(name) || current.find_schema(name));
      return name;
    };
    auto stop = [&](std::string reason) {
      report.status = CompletionStatus::bounded_out;
      report.reason = std::move(reason);
      return KnuthBendixResult{std::move(current), std::move(report)};
    };

    for (std::size_t round = 1; round <= opts.max_rounds; ++round) {
      report.rounds = round;
      std::deque<std::pair<Word, Word>> pending;
      for (auto const& k : critical_peaks(current, opts.schema_var_bound)) {
        auto res = resolve_peak(k, current);
        if (auto const* u = std::get_if<UnresolvedPeak>(&res)) {
          pending.emplace_back(u->u, u->v);
        }
      }
      if (pending.empty()) {
        report.status = CompletionStatus::completed;
        return KnuthBendixResult{std::move(current), std::move(report)};
      }
      while (!pending.empty()) {
        auto [u, v] = std::move(pending.front());
        pending.pop_front();
        u = normalize(u, current);
        v = normalize(v, current);
        if (u == v) {
          continue;
        }
        if (compare_shortlex(u, v, order) == std::strong_ordering::less) {
          std::swap(u, v);
        }
        if (u.size() > opts.max_lhs_len) {
          return stop("a new rule would have lhs longer than "
                      + std::to_string(opts.max_lhs_len));
        }
        if (report.discovered.size() >= opts.max_new_rules) {
          return stop("reached " + std::to_string(opts.max_new_rules)
                      + " new rules");
        }
        Rule added{fresh_name(), u, v, std::nullopt};
        report.discovered.push_back(added);

        std::vector<Rule> kept;
        for (auto& r : rules) {
          if (r.lhs.find(added.lhs) != Word::npos) {
            pending.emplace_back(std::move(r.lhs), std::move(r.rhs));
          } else {
            kept.push_back(std::move(r));
          }
        }
        kept.push_back(std::move(added));
        rules   = std::move(kept);
        current = build();
        for (auto& r : rules) {
          r.rhs = normalize(r.rhs, current);
        }
        current = build();
      }
    }
    return stop("reached " + std::to_string(opts.max_rounds) + " rounds");
  }

  std::string format_knuth_bendix_report(KnuthBendixReport const& r,
                                         Alphabet const&          alphabet) {
    std::ostringstream out;
    out << "status: "
        << (r.status == CompletionStatus::completed ? "completed"
                                                    : "bounded-out")
        << '\n';
    out << "rounds: " << r.rounds << '\n';
    for (auto const& rule : r.discovered) {
      out << "new rule " << rule.name << " : " << alphabet.format(rule.lhs)
          << " -> " << alphabet.format(rule.rhs) << '\n';
    }
    if (!r.reason.empty()) {
      out << "reason: " << r.reason << '\n';
    }
    return out.str();
  }

  bool word_problem_equal(Word const&         u,
                          Word const&         v,
                          Presentation const& p_complete) {
    return normalize(u, p_complete) == normalize(v, p_complete);
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence oracle
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // One side of a rule or schema: prefix, optional variable, suffix.
    struct Pattern {
      Word              prefix;
      Word              suffix;
      RuleSchema const* schema;  // null for a plain rule
    };

    struct Move {
      Pattern from;
      Pattern to;
    };

    std::vector<Move> moves_of(Presentation const& p, bool both_directions) {
      std::vector<Move> result;
      for (auto const& r : p.rules()) {
        result.push_back({{r->lhs, {}, nullptr}, {r->rhs, {}, nullptr}});
        if (both_directions) {
          result.push_back({{r->rhs, {}, nullptr}, {r->lhs, {}, nullptr}});
        }
      }
      for (auto const& s : p.schemas()) {
        Pattern l{s.lhs_prefix(), s.lhs_suffix(), &s};
        Pattern r{s.rhs_prefix(), s.rhs_suffix(), &s};
        result.push_back({l, r});
        if (both_directions) {
          result.push_back({r, l});
        }
      }
      return result;
    }

    // Calls f(image) for every application of m to w whose image has
    // length at most max_len.
    template <typename F>
    void for_each_image(Word const&  w,
                        Move const&  m,
                        std::size_t  max_len,
                        F&&          f) {
      auto const& pre = m.from.prefix;
      auto const& suf = m.from.suffix;
      for (std::size_t i = 0; i + pre.size() <= w.size(); ++i) {
        if (w.compare(i, pre.size(), pre) != 0) {
          continue;
        }
        if (m.from.schema == nullptr) {
          if (w.size() - pre.size() + m.to.prefix.size() <= max_len) {
            Word image = w;
            image.replace(i, pre.size(), m.to.prefix);
            f(image);
          }
          continue;
        }
        std::size_t const start = i + pre.size();
        for (std::size_t j = start; w.size() - j >= suf.size(); ++j) {
          if (w.compare(j, suf.size(), suf) == 0) {
            std::size_t const len = w.size() - pre.size() - suf.size()
                                    + m.to.prefix.size() + m.to.suffix.size();
            if (len <= max_len) {
              Word image = w.substr(0, i) + m.to.prefix
                           + w.substr(start, j - start) + m.to.suffix
                           + w.substr(j + suf.size());
              f(image);
            }
          }
          if (j == w.size() || !m.from.schema->in_range(w[j])) {
            break;
          }
        }
      }
    }

    struct WordHash {
      std::size_t operator()(Word const& w) const noexcept {
        return std::hash<std::u8string>{}(w);
      }
    };
  }  // namespace

  bool bfs_equivalence_oracle(Word const&         u,
                              Word const&         v,
                              Presentation const& p,
                              std::size_t         max_len) {
    if (u == v) {
      return true;
    }
    auto const                             moves = moves_of(p, true);
    std::unordered_set<Word, WordHash>     seen{u};
    std::deque<Word>                       queue{u};
    bool                                   found = false;
    while (!queue.empty() && !found) {
      Word w = std::move(queue.front());
      queue.pop_front();
      for (auto const& m : moves) {
        for_each_image(w, m, max_len, [&](Word const& x) {
          if (x == v) {
            found = true;
          }
          if (seen.insert(x).second) {
            queue.push_back(x);
          }
        });
      }
    }
    return found;
  }

  EquivalenceOracle::EquivalenceOracle(Presentation const& p,
                                       std::size_t         max_len)
      : alphabet_size_(p.alphabet().size()), max_len_(max_len) {
    std::size_t total = 0;
    std::size_t level = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
      level_start_.push_back(total);
      total += level;
      if (total > 100'000'000) {
        throw Error("equivalence oracle too large");
      }
      level *= alphabet_size_;
    }
    std::vector<std::uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    // Every edge with both ends in range is seen from its lhs end.
    auto const moves   = moves_of(p, false);
    auto const letters = p.alphabet().letters();
    auto const words   = all_words(letters, max_len);
    for (std::size_t k = 0; k < words.size(); ++k) {
      for (auto const& m : moves) {
        for_each_image(words[k], m, max_len, [&](Word const& x) {
          auto a = find(static_cast<std::uint32_t>(k));
          auto b = find(static_cast<std::uint32_t>(index(x)));
          if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
          }
        });
      }
    }
    root_.resize(total);
    for (std::uint32_t x = 0; x < total; ++x) {
      root_[x] = find(x);
    }
  }

  std::size_t EquivalenceOracle::index(Word const& w) const {
    if (w.size() > max_len_) {
      throw Error("word longer than the oracle bound "
                  + std::to_string(max_len_));
    }
    std::size_t value = 0;
    for (Letter x : w) {
      value = value * alphabet_size_ + x;
    }
    return level_start_[w.size()] + value;
  }

  std::size_t EquivalenceOracle::component(Word const& w) const {
    return root_[index(w)];
  }

  bool EquivalenceOracle::equivalent(Word const& u, Word const& v) const {
    return component(u) == component(v);
  }

}  // namespace rwlab
