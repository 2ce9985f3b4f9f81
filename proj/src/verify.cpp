#include "rwlab/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "rwlab/casestudy.hpp"
#include "rwlab/completion.hpp"
#include "rwlab/error.hpp"
#include "rwlab/obstruction.hpp"
#include "rwlab/structure.hpp"

namespace rwlab {

  using namespace letters;

  void Report::add(std::string check, bool pass, std::string detail) {
    lines.push_back({std::move(check), pass, std::move(detail)});
  }

  std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(
        lines.begin(), lines.end(), [](auto const& l) { return l.pass; }));
  }

  bool Report::all_pass() const {
    return passed() == lines.size();
  }

  void Report::append(Report const& that) {
    lines.insert(lines.end(), that.lines.begin(), that.lines.end());
  }

  std::string format_report(Report const& r, bool machine) {
    std::ostringstream out;
    for (auto const& l : r.lines) {
      if (machine) {
        out << "check=" << l.check << "\tstatus=" << (l.pass ? "pass" : "FAIL")
            << "\tdetail=" << l.detail << '\n';
      } else {
        out << l.check << '\t' << (l.pass ? "pass" : "FAIL") << '\t'
            << l.detail << '\n';
      }
    }
    if (machine) {
      out << "summary\tpassed=" << r.passed() << "\ttotal=" << r.lines.size()
          << '\n';
    } else {
      out << "summary: " << r.passed() << '/' << r.lines.size() << '\n';
    }
    return out.str();
  }

  namespace {
    Ambient const& zg() {
      static Ambient const p = preset("P");
      return p;
    }

    std::vector<Word> group_words(std::size_t max_len) {
      return all_words(group, max_len);
    }

    std::string str(std::size_t n) {
      return std::to_string(n);
    }

    // b^δa^ε − a^εb^δ
    RingElement commutator(Sign eps, Sign delta) {
      RingElement r(zg());
      r.add_word(Word{b_pow(delta), a_pow(eps)}, 1);
      r.add_word(Word{a_pow(eps), b_pow(delta)}, -1);
      return r;
    }

    RingElement phi_C(Word const& w, Sign eps, Sign delta) {
      return phi_path(build_C_path(w, eps, delta), k_a_weights(), zg());
    }

    bool freely_reduced(Word const& w) {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == inv(w[i - 1])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Circuit invariant table
  ////////////////////////////////////////////////////////////////////////

  Report verify_figure2(std::size_t       max_word_len,
                        std::size_t       ct7_max_word_len,
                        WeightSpec const& ws,
                        unsigned          jobs) {
    Report report;
    jobs = std::max(1u, jobs);
    for (CtFamily f : all_ct_families) {
      std::size_t const bound
          = f == CtFamily::ct7 ? ct7_max_word_len : max_word_len;
      struct Tally {
        std::size_t count      = 0;
        std::size_t mismatches = 0;
        std::size_t first      = SIZE_MAX;
        std::string first_detail;
      };
      std::vector<Tally> tallies(jobs);
      auto               work = [&](unsigned t) {
        Tally&      tally = tallies[t];
        std::size_t index = 0;
        for_each_ct_params(f, bound, [&](CtParams const& p) {
          if (index++ % jobs != t) {
            return;
          }
          ++tally.count;
          Path const        c        = build_ct_circuit(p);
          RingElement const got      = phi_path(c, ws, zg());
          RingElement const expected = closed_form_ct(p, zg());
          if (!c.is_closed() || got != expected) {
            if (tally.mismatches++ == 0) {
              tally.first        = index - 1;
              tally.first_detail = format_params(p) + ": Φ = " + format_ring(got)
                                   + ", expected " + format_ring(expected)
                                   + (c.is_closed() ? "" : " (not closed)");
            }
          }
        });
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) {
          threads.emplace_back(work, t);
        }
        for (auto& th : threads) {
          th.join();
        }
      }
      Tally total;
      for (auto const& t : tallies) {
        total.count += t.count;
        total.mismatches += t.mismatches;
        if (t.mismatches > 0 && t.first < total.first) {
          total.first        = t.first;
          total.first_detail = t.first_detail;
        }
      }
      std::string detail = str(total.count) + " circuits, word slots <= "
                           + str(bound);
      if (total.mismatches > 0) {
        detail = str(total.mismatches) + " of " + str(total.count)
                 + " circuits differ; first " + total.first_detail;
      }
      report.add("figure2/" + format_family(f), total.mismatches == 0, detail);
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities
  ////////////////////////////////////////////////////////////////////////

  Report verify_identities(std::size_t   max_len,
                           std::size_t   random_tuples,
                           std::size_t   random_max_len,
                           std::uint64_t seed) {
    Report      report;
    auto const& q = *preset("Q");

    // (i) Φ(K_x) = −∂x
    {
      std::size_t bad = 0;
      for (Letter x : group) {
        auto const k = q.find_rule("K_" + zg()->alphabet().token(x));
        auto const e = single(Edge{Word(), k, Sign::plus, Word()});
        if (phi_path(e, k_a_weights(), zg())
            != negate(partial_derivation(Word{x}, zg()))) {
          ++bad;
        }
      }
      report.add("identity(i)", bad == 0, "4 letters, " + str(bad) + " failures");
    }

    auto ii = [&](Word const& w, Sign e, Sign d) {
      return phi_C(w, e, d)
             == negate(multiply(partial_derivation(w, zg()), commutator(e, d)));
    };
    auto iii = [&](Letter x, Word const& w, Sign e, Sign d) {
      auto rhs = phi_C(w, e, d)
                 - multiply(right_mul(partial_derivation(Word{x}, zg()), w),
                            commutator(e, d));
      return phi_C(x + w, e, d) == rhs;
    };
    auto iv = [&](Word const& w1, Word const& w2, Sign e, Sign d) {
      auto rhs = phi_C(w2, e, d)
                 - multiply(right_mul(partial_derivation(w1, zg()), w2),
                            commutator(e, d));
      return phi_C(w1 + w2, e, d) == rhs;
    };

    auto const  words = group_words(max_len);
    std::size_t n2 = 0, bad2 = 0, n3 = 0, bad3 = 0, n4 = 0, bad4 = 0;
    for (Sign e : both_signs) {
      for (Sign d : both_signs) {
        for (auto const& w : words) {
          ++n2;
          bad2 += !ii(w, e, d);
          if (w.size() < max_len) {
            for (Letter x : group) {
              ++n3;
              bad3 += !iii(x, w, e, d);
            }
          }
        }
        for (auto const& w1 : words) {
          for (auto const& w2 : words) {
            if (w1.size() + w2.size() <= max_len) {
              ++n4;
              bad4 += !iv(w1, w2, e, d);
            }
          }
        }
      }
    }
    report.add("identity(ii)", bad2 == 0,
               str(n2) + " cases, |w| <= " + str(max_len) + ", " + str(bad2)
                   + " failures");
    report.add("identity(iii)", bad3 == 0,
               str(n3) + " cases, |xw| <= " + str(max_len) + ", " + str(bad3)
                   + " failures");
    report.add("identity(iv)", bad4 == 0,
               str(n4) + " cases, |w1 w2| <= " + str(max_len) + ", "
                   + str(bad4) + " failures");

    std::mt19937_64 rng(seed);
    auto random_word = [&rng, random_max_len]() {
      std::uniform_int_distribution<std::size_t> len(0, random_max_len);
      std::uniform_int_distribution<int>         letter(0, 3);
      Word                                       w(len(rng), a);
      for (auto& x : w) {
        x = static_cast<Letter>(letter(rng));
      }
      return w;
    };
    std::size_t bad_random = 0;
    for (std::size_t i = 0; i < random_tuples; ++i) {
      Word const   w1 = random_word();
      Word const   w2 = random_word();
      Letter const x  = static_cast<Letter>(rng() % 4);
      Sign const   e  = rng() % 2 ? Sign::plus : Sign::minus;
      Sign const   d  = rng() % 2 ? Sign::plus : Sign::minus;
      if (!ii(w1 + w2, e, d) || !iii(x, w1, e, d) || !iv(w1, w2, e, d)) {
        ++bad_random;
      }
    }
    report.add("identities/random", bad_random == 0,
               str(random_tuples) + " random (w1,w2,x,ε,δ), words <= "
                   + str(random_max_len) + ", " + str(bad_random)
                   + " failures");
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prop 3.1
  ////////////////////////////////////////////////////////////////////////

  Report verify_prop31(std::size_t max_len,
                       std::size_t pair_len,
                       std::size_t oracle_len) {
    Report      report;
    auto const& qbar    = *preset("Qbar");
    auto const& q       = *preset("Q");
    auto const  letters = qbar.alphabet().letters();
    {
      auto const  words = all_words(letters, max_len);
      std::size_t bad   = 0;
      std::string first;
      for (auto const& w : words) {
        if (!in_prop31_normal_forms(normalize(w, qbar))) {
          if (bad++ == 0) {
            first = "; first " + qbar.alphabet().format(w);
          }
        }
      }
      report.add("prop31/normal-forms", bad == 0,
                 str(words.size()) + " words of length <= " + str(max_len)
                     + ", " + str(bad) + " outside the set" + first);
    }
    {
      auto const r = is_confluent_bounded(qbar, 3);
      report.add("prop31/confluence", r.confluent,
                 str(r.peaks.size()) + " critical peaks at schema bound 3, "
                     + str(r.unresolved_count()) + " unresolved");
    }
    {
      EquivalenceOracle const oracle(q, oracle_len);
      auto const              words = all_words(letters, pair_len);
      std::vector<Word>        nf;
      std::vector<std::size_t> comp;
      for (auto const& w : words) {
        nf.push_back(normalize(w, qbar));
        comp.push_back(oracle.component(w));
      }
      std::size_t pairs = 0, bad = 0;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
          ++pairs;
          bad += (nf[i] == nf[j]) != (comp[i] == comp[j]);
        }
      }
      report.add("prop31/oracle-agreement", bad == 0,
                 str(pairs) + " pairs of words of length <= " + str(pair_len)
                     + ", oracle bound " + str(oracle_len) + ", " + str(bad)
                     + " disagreements");
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Peaks, orientation, completion
  ////////////////////////////////////////////////////////////////////////

  Report verify_peaks(std::size_t schema_var_bound) {
    Report      report;
    auto const& qbar = *preset("Qbar");
    auto const& q    = *preset("Q");
    auto const  r    = is_confluent_bounded(qbar, schema_var_bound);
    report.add("peaks/Qbar-confluent", r.confluent,
               str(r.peaks.size()) + " peaks, " + str(r.unresolved_count())
                   + " unresolved");

    std::map<CtFamily, std::size_t> families;
    std::size_t                     low = 0, unclassified = 0;
    std::string                     first;
    for (auto const& res : r.peaks) {
      auto const& k = std::visit([](auto const& x) -> CriticalPeak const& {
        return x.peak;
      }, res);
      if (count(k.source, h) > 1) {
        continue;
      }
      ++low;
      auto params = classify_peak(k);
      if (params && build_ct_bar_circuit(*params).start() == k.source) {
        ++families[params->family];
      } else {
        if (unclassified++ == 0) {
          first = "; first " + format_peak(k, qbar.alphabet());
        }
      }
    }
    std::string counts;
    for (CtFamily f : all_ct_families) {
      counts += " " + format_family(f) + "=" + str(families[f]);
    }
    report.add("peaks/CT-classification",
               unclassified == 0 && families.size() == 7
                   && std::all_of(families.begin(), families.end(),
                                  [](auto const& e) { return e.second > 0; }),
               str(low) + " peaks with at most one h:" + counts + ", "
                   + str(unclassified) + " unclassified" + first);

    auto const rq    = is_confluent_bounded(q, 0);
    Word const hbab  = q.alphabet().parse_word("h b a b");
    Word const hbba  = q.alphabet().parse_word("h b b a");
    bool       found = false;
    for (auto const& res : rq.peaks) {
      if (auto const* u = std::get_if<UnresolvedPeak>(&res)) {
        if ((u->u == hbab && u->v == hbba) || (u->u == hbba && u->v == hbab)) {
          found = true;
        }
      }
    }
    report.add("peaks/Q-not-confluent", !rq.confluent && found,
               str(rq.unresolved_count()) + " of " + str(rq.peaks.size())
                   + " peaks unresolved; (h b a b, h b b a) "
                   + (found ? "among them" : "missing"));
    return report;
  }

  Report verify_orientation(std::size_t schema_var_bound) {
    Report      report;
    auto const& qbar = *preset("Qbar");
    auto const  rules = rule_instances(qbar, schema_var_bound);
    std::size_t bad   = 0;
    std::string first;
    for (auto const& r : rules) {
      if (compare_shortlex(r->lhs, r->rhs, qbar.effective_ordering())
          != std::strong_ordering::greater) {
        if (bad++ == 0) {
          first = "; first " + r->name;
        }
      }
    }
    report.add("orientation/Qbar", bad == 0 && qbar.orientable(),
               str(rules.size()) + " rules and instances (schema bound "
                   + str(schema_var_bound) + "), " + str(bad)
                   + " not oriented" + first);
    return report;
  }

  Report verify_completion(std::size_t max_new_rules, std::size_t max_lhs_len) {
    Report      report;
    auto const& q    = *preset("Q");
    auto const& qbar = *preset("Qbar");
    KnuthBendixOptions opts;
    opts.max_new_rules = max_new_rules;
    opts.max_lhs_len   = max_lhs_len;
    auto const  kb     = knuth_bendix(q, opts);
    auto const& rules  = kb.report.discovered;
    std::size_t bad    = 0;
    std::string first;
    bool        example = false;
    Word const  hbab    = q.alphabet().parse_word("h b a b");
    Word const  hbba    = q.alphabet().parse_word("h b b a");
    for (auto const& r : rules) {
      // lhs = h w a^ε b^δ for some schema instance; its rhs must be
      // equivalent to the instance's rhs h w b^δ a^ε.
      Word const& l  = r.lhs;
      bool        ok = l.size() >= 3 && l[0] == h && is_a_letter(l[l.size() - 2])
                && (l.back() == b || l.back() == b_inv)
                && std::all_of(l.begin() + 1, l.end(),
                               [](Letter x) { return x <= b_inv; });
      if (ok) {
        Word const w = l.substr(1, l.size() - 3);
        auto const s = qbar.find_schema(
            std::string("Cbar_") + (l[l.size() - 2] == a ? "+" : "-")
            + (l.back() == b ? "+" : "-"));
        Rule const inst = instantiate_schema(*s, w, qbar.alphabet());
        ok = inst.lhs == l
             && normalize(inst.rhs, qbar) == normalize(r.rhs, qbar);
      }
      if (!ok && bad++ == 0) {
        first = "; first " + qbar.alphabet().format(r.lhs) + " -> "
                + qbar.alphabet().format(r.rhs);
      }
      example = example || (r.lhs == hbab && r.rhs == hbba);
    }
    report.add("completion/Q-discovers-Cbar",
               bad == 0 && !rules.empty() && example,
               str(rules.size()) + " rules discovered ("
                   + (kb.report.status == CompletionStatus::completed
                          ? "completed"
                          : "bounded-out")
                   + "), " + str(bad) + " not Cbar instances"
                   + (example ? "; includes h b a b -> h b b a" : "") + first);
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homotopy generators
  ////////////////////////////////////////////////////////////////////////

  Report verify_homotopy(std::size_t squares, std::size_t paths,
                         std::uint64_t seed) {
    Report            report;
    auto const&       q     = *preset("Q");
    Ambient const     zm    = preset("Qbar");
    std::mt19937_64   rng(seed);
    std::size_t const max_word = 12;

    auto random_word = [&](std::size_t lo, std::size_t hi) {
      std::uniform_int_distribution<std::size_t> len(lo, hi);
      Word w(len(rng), a);
      for (auto& x : w) {
        x = static_cast<Letter>(rng() % 5);
      }
      return w;
    };
    auto weighted = [](Edge const& e) {
      return k_a_weights().weight(e.rule->name) != 0;
    };
    // Half of the draws prefer an edge of non-zero weight when one exists,
    // so that the invariant is exercised.
    auto pick = [&](std::vector<Edge> const& es) -> std::optional<Edge> {
      if (es.empty()) {
        return std::nullopt;
      }
      std::vector<Edge const*> ws;
      for (auto const& e : es) {
        if (weighted(e)) {
          ws.push_back(&e);
        }
      }
      if (!ws.empty() && rng() % 2 == 0) {
        return *ws[rng() % ws.size()];
      }
      return es[rng() % es.size()];
    };
    auto random_edge = [&](Word const& w) -> std::optional<Edge> {
      std::vector<Edge> es;
      for (auto& e : edges_at(w, q)) {
        if (e.target().size() <= max_word) {
          es.push_back(std::move(e));
        }
      }
      return pick(es);
    };

    std::size_t bad = 0, built = 0, nontrivial = 0;
    while (built < squares) {
      Path sq(Word{});
      if (built % 2 == 0) {
        auto e1 = random_edge(random_word(1, 5));
        auto e2 = random_edge(random_word(1, 5));
        if (!e1 || !e2) {
          continue;
        }
        sq = interchange_square(*e1, *e2);
      } else {
        Word w  = random_word(2, 8);
        auto es = edges_at(w, q);
        if (es.size() < 2) {
          continue;
        }
        auto const e1 = *pick(es);
        auto const e2 = *pick(es);
        try {
          sq = interchange_square_at(e1, e2);
        } catch (Error const&) {
          continue;  // overlapping factors
        }
      }
      ++built;
      nontrivial += std::any_of(sq.edges().begin(), sq.edges().end(), weighted);
      if (!sq.is_closed() || !phi_path(sq, k_a_weights(), zm).is_zero()) {
        ++bad;
      }
    }
    report.add("homotopy/interchange", bad == 0,
               str(built) + " random squares (" + str(nontrivial)
                   + " with weighted edges), " + str(bad) + " with Φ != 0");

    bad        = 0;
    nontrivial = 0;
    for (std::size_t i = 0; i < paths; ++i) {
      Word        start = random_word(0, 6);
      Path        p(start);
      std::size_t len = 1 + rng() % 8;
      for (std::size_t k = 0; k < len; ++k) {
        auto e = random_edge(p.end());
        if (!e) {
          break;
        }
        p = compose(p, single(*e));
      }
      if (!phi_path(p, k_a_weights(), zm).is_zero()) {
        ++nontrivial;
      }
      Path const loop = compose(p, invert(p));
      if (!loop.is_closed() || !phi_path(loop, k_a_weights(), zm).is_zero()) {
        ++bad;
      }
    }
    report.add("homotopy/cancellation", bad == 0,
               str(paths) + " random paths (" + str(nontrivial)
                   + " with Φ(p) != 0), " + str(bad)
                   + " with Φ(p∘p⁻¹) != 0");
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  Report verify_structure(std::size_t classify_len,
                          std::size_t sigma_len,
                          int         grid) {
    Report      report;
    auto const& qbar = *preset("Qbar");
    {
      auto const  words = all_words(qbar.alphabet().letters(), classify_len);
      std::size_t bad   = 0;
      for (auto const& w : words) {
        auto const expected = static_cast<HClass>(std::min<std::size_t>(
            count(w, h), 2));
        bad += classify(w, qbar) != expected;
      }
      report.add("structure/classify", bad == 0,
                 str(words.size()) + " words of length <= " + str(classify_len)
                     + ", " + str(bad) + " mismatches");
    }
    {
      auto const words = group_words(sigma_len);
      std::vector<Word>                                 keys;
      std::vector<std::pair<std::int64_t, std::int64_t>> exps;
      for (auto const& w : words) {
        keys.push_back(sigma_key(w));
        exps.emplace_back(a_exponent(w), b_exponent(w));
      }
      std::size_t bad = 0, pairs = 0;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
          ++pairs;
          bad += (keys[i] == keys[j]) != (exps[i] == exps[j]);
        }
      }
      report.add("structure/sigma", bad == 0,
                 str(pairs) + " pairs of words of length <= " + str(sigma_len)
                     + ", " + str(bad) + " mismatches");
    }
    {
      auto const failures = stabilizer_grid_check(grid);
      report.add("structure/stabilizer-grid", failures.empty(),
                 "|j|,|k| <= " + std::to_string(grid) + ", "
                     + str(failures.size()) + " failures"
                     + (failures.empty() ? "" : "; first " + failures[0]));
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Obstruction
  ////////////////////////////////////////////////////////////////////////

  Report verify_obstruction(std::size_t commutator_len,
                            std::size_t phi_len,
                            std::size_t x_len,
                            int         max_k) {
    Report report;
    {
      std::size_t n = 0, bad = 0;
      for (auto const& w : group_words(commutator_len)) {
        if (!freely_reduced(w)) {
          continue;
        }
        for (Sign e : both_signs) {
          for (Sign d : both_signs) {
            ++n;
            try {
              bad += !commutator_witness(w, e, d).verified;
            } catch (Error const&) {
              ++bad;
            }
          }
        }
      }
      report.add("obstruction/commutator-witness", bad == 0,
                 str(n) + " witnesses, reduced |w| <= " + str(commutator_len)
                     + ", " + str(bad) + " failures");
    }
    {
      std::size_t n = 0, bad = 0;
      for (CtFamily f : all_ct_families) {
        for_each_ct_params(f, phi_len, [&](CtParams const& p) {
          ++n;
          try {
            bad += !phi_to_x_witness(p).verified;
          } catch (Error const&) {
            ++bad;
          }
        });
      }
      report.add("obstruction/phi-to-x-witness", bad == 0,
                 str(n) + " witnesses, word slots <= " + str(phi_len) + ", "
                     + str(bad) + " failures");
    }
    {
      std::size_t n = 1, bad = !basepoint_apply(x_generator_a()).is_zero();
      for (auto const& w : group_words(x_len)) {
        for (Sign e : both_signs) {
          for (Sign d : both_signs) {
            ++n;
            bad += !basepoint_apply(x_generator(w, e, d)).is_zero();
          }
        }
      }
      report.add("obstruction/basepoint-kills-X", bad == 0,
                 "1−a and " + str(n - 1) + " generators with |w| <= "
                     + str(x_len) + ", " + str(bad) + " not killed");
    }
    {
      std::set<std::string> images;
      std::size_t           zero = 0;
      for (int k = 1; k <= max_k; ++k) {
        RingElement x = ring_one(zg());
        x.add_word(Word(static_cast<std::size_t>(k), b), -1);
        auto const v = basepoint_apply(x);
        zero += v.is_zero();
        images.insert(format_coset_vector(v));
      }
      report.add("obstruction/1-b^k-survives",
                 zero == 0 && images.size() == static_cast<std::size_t>(max_k),
                 str(images.size()) + " distinct non-zero coset vectors for k = 1.."
                     + std::to_string(max_k));
    }
    {
      std::size_t bad = !hn_member(Word{a}) + hn_member(Word{b});
      for (auto const& w : group_words(3)) {
        Word const c = w + a + b + a_inv + b_inv;
        Word       conj = c;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          conj.push_back(inv(*it));
        }
        bad += !hn_member(conj);
      }
      report.add("obstruction/hn-oracle", bad == 0,
                 "a and conjugated commutators are members, b is not; "
                     + str(bad) + " failures");
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isometry
  ////////////////////////////////////////////////////////////////////////

  Report verify_isometry(std::size_t radius,
                         std::size_t h_radius,
                         std::size_t nf_len) {
    Report      report;
    auto const& m = *preset("M4");
    auto const& n = *preset("N4");
    {
      std::set<std::string> sm, sn;
      for (auto const& w : enumerate_normal_forms(m, nf_len)) {
        sm.insert(m.alphabet().format(w));
      }
      for (auto const& w : enumerate_normal_forms(n, nf_len)) {
        sn.insert(n.alphabet().format(w));
      }
      report.add("isometry/normal-forms", sm == sn,
                 str(sm.size()) + " vs " + str(sn.size())
                     + " normal forms of length <= " + str(nf_len));
    }
    {
      auto const cm = is_confluent_bounded(m, 3);
      auto const cn = is_confluent_bounded(n, 3);
      report.add("isometry/complete", cm.confluent && cn.confluent,
                 "M4: " + str(cm.unresolved_count()) + " of "
                     + str(cm.peaks.size()) + " peaks unresolved; N4: "
                     + str(cn.unresolved_count()) + " of "
                     + str(cn.peaks.size()));
    }
    auto ball = [&](std::size_t r, std::string const& centre) {
      auto const iso = isometry_check(m, n, r, centre);
      report.add("isometry/ball(" + centre + "," + str(r) + ")", iso.pass,
                 str(iso.vertices) + " vertices, " + str(iso.pairs_checked)
                     + " ordered pairs, " + str(iso.violations.size())
                     + " violations"
                     + (iso.violations.empty() ? ""
                                               : "; first " + iso.violations[0]));
    };
    ball(radius, "ε");
    ball(h_radius, "h");
    {
      auto const iso = isometry_check(*preset("Q"), *preset("P"), 2);
      bool const differ
          = !iso.pass && !iso.violations.empty()
            && iso.violations[0] == "vertex sets differ";
      report.add("isometry/negative-control", differ,
                 "Q against P: "
                     + (iso.violations.empty() ? std::string("no violation")
                                               : iso.violations[0]));
    }
    return report;
  }

}  // namespace rwlab
