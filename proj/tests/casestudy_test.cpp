#include "support.hpp"

#include "rwlab/completion.hpp"
#include "rwlab/invariant.hpp"
#include "rwlab/verify.hpp"

using namespace rwlab;
using namespace rwlab::testing;

namespace {
  bool has_rule(Presentation const& p, std::string const& lhs, std::string const& rhs) {
    Word const l = p.alphabet().parse_word(lhs);
    Word const r = p.alphabet().parse_word(rhs);
    return std::any_of(p.rules().begin(), p.rules().end(), [&](RulePtr const& x) {
      return x->lhs == l && x->rhs == r;
    });
  }

  bool only_rules_of(Path const& p, Presentation const& q) {
    return std::all_of(p.edges().begin(), p.edges().end(), [&](Edge const& e) {
      auto const r = q.find_rule(e.rule->name);
      return r && r->lhs == e.rule->lhs && r->rhs == e.rule->rhs;
    });
  }
}  // namespace

TEST_SUITE("casestudy") {
  TEST_CASE("built-in presentations") {
    CHECK(preset("P")->rules().size() == 4);
    CHECK(preset("Q")->rules().size() == 17);
    CHECK(preset("Qbar")->rules().size() == 17);
    CHECK(preset("Qbar")->schemas().size() == 4);
    CHECK(preset("M4")->alphabet().size() == 6);
    CHECK(has_rule(*preset("M4"), "h h", "z"));
    auto const& n = *preset("N4");
    CHECK(n.alphabet().size() == 6);
    for (auto const& u : n.alphabet().tokens()) {
      CHECK(has_rule(n, "z " + u, "z"));
      CHECK(has_rule(n, u + " z", "z"));
    }
    CHECK(has_rule(n, "h h", "h"));
    CHECK_THROWS(preset("R"));
  }

  TEST_CASE("realizations of the schema instances") {
    Path const e = build_C_path(Word(), Sign::plus, Sign::plus);
    REQUIRE(e.size() == 1);
    CHECK(e.edges()[0].rule->name == "C_++");

    Path const a = build_C_path(word("a"), Sign::plus, Sign::plus);
    REQUIRE(a.size() == 3);
    CHECK(a.edges()[0] == Edge{word(""), preset("Q")->find_rule("K_a"), Sign::minus, word("a b")});
    CHECK(a.edges()[1] == Edge{word("a"), preset("Q")->find_rule("C_++"), Sign::plus, word("")});
    CHECK(a.edges()[2] == Edge{word(""), preset("Q")->find_rule("K_a"), Sign::plus, word("b a")});

    Path const ba = build_C_path(word("b a"), Sign::minus, Sign::plus);
    CHECK(ba.size() == 5);
    CHECK(ba.start() == word("h b a a' b"));
    CHECK(ba.end() == word("h b a b a'"));
  }

  TEST_CASE("realization endpoints and validity") {
    for (auto const& w : all_words(group_letters(), 6)) {
      for (Sign e : both_signs) {
        for (Sign d : both_signs) {
          Path const p = build_C_path(w, e, d);
          Word const x{letters::a_pow(e)}, y{letters::b_pow(d)};
          REQUIRE(p.start() == word("h") + w + x + y);
          REQUIRE(p.end() == word("h") + w + y + x);
          REQUIRE(p.size() == 2 * w.size() + 1);
        }
      }
    }
    // Validated construction of a sample.
    Path const p = build_C_path(word("a b' a'"), Sign::minus, Sign::minus);
    CHECK(Path(p.start(), p.edges()) == p);
  }

  TEST_CASE("critical circuits") {
    CtParams ct2;
    ct2.family = CtFamily::ct2;
    Path const c2 = build_ct_circuit(ct2);
    CHECK(c2.size() == 2);
    CHECK(c2.start() == word("a a' a"));
    CHECK(c2.is_closed());

    CtParams ct6;
    ct6.family = CtFamily::ct6;
    ct6.x      = letters::b;
    Path const c6 = build_ct_circuit(ct6);
    CHECK(c6.size() == 4);
    CHECK(c6.start() == word("b b' h"));
    CHECK(c6.is_closed());

    CtParams ct5;
    ct5.family = CtFamily::ct5;
    Path const c5 = build_ct_circuit(ct5);
    CHECK(c5.start() == word("a h a b"));
    CHECK(c5.is_closed());
    CHECK(only_rules_of(c5, *preset("Q")));
  }

  TEST_CASE("every circuit is closed and over the original rules") {
    auto const& q = *preset("Q");
    for (CtFamily f : all_ct_families) {
      CAPTURE(format_family(f));
      for_each_ct_params(f, 2, [&](CtParams const& p) {
        Path const bar = build_ct_bar_circuit(p);
        Path const c   = build_ct_circuit(p);
        REQUIRE(bar.is_closed());
        REQUIRE(c.is_closed());
        REQUIRE(c.start() == bar.start());
        REQUIRE(only_rules_of(c, q));
        REQUIRE(Path(c.start(), c.edges()) == c);
      });
    }
  }

  TEST_CASE("circuit sources are critical peaks of the completed system") {
    auto const& qbar = *preset("Qbar");
    std::set<Word> sources;
    // Slots of length 1 need schema instances of length up to 4.
    for (auto const& k : critical_peaks(qbar, 4)) {
      sources.insert(k.source);
    }
    for (CtFamily f : all_ct_families) {
      CAPTURE(format_family(f));
      for_each_ct_params(f, 1, [&](CtParams const& p) {
        REQUIRE(sources.contains(build_ct_bar_circuit(p).start()));
      });
    }
  }

  TEST_CASE("figure sweep at small bounds and its negative control") {
    CHECK(verify_figure2(0, 0).all_pass());
    CHECK(verify_figure2(2, 2).all_pass());

    WeightSpec const corrupt({{"K_a", 1}, {"K_a'", 1}});
    Report const     r = verify_figure2(1, 1, corrupt);
    bool             ct6_failed = false;
    for (auto const& l : r.lines) {
      if (l.check == "figure2/CT6") {
        ct6_failed = !l.pass;
      }
    }
    CHECK(ct6_failed);
    CHECK_FALSE(r.all_pass());
  }

  TEST_CASE("the sweep gives the same answer on several threads") {
    auto const one  = verify_figure2(2, 1, k_a_weights(), 1);
    auto const many = verify_figure2(2, 1, k_a_weights(), 3);
    CHECK(format_report(one) == format_report(many));
  }

  TEST_CASE("normal-form set membership") {
    CHECK_FALSE(in_prop31_normal_forms(word("h a b")));
    CHECK(in_prop31_normal_forms(normalize(word("h a b"), *preset("Qbar"))));
    CHECK(in_prop31_normal_forms(word("h b b a' a'")));
    CHECK(in_prop31_normal_forms(word("h h")));
    CHECK(in_prop31_normal_forms(word("a b a'")));
    CHECK_FALSE(in_prop31_normal_forms(word("a a' b")));
    CHECK_FALSE(in_prop31_normal_forms(word("h b b'")));
    CHECK(verify_prop31(4, 3, 7).all_pass());
  }
}
