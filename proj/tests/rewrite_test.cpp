#include "support.hpp"

#include "rwlab/error.hpp"
#include "rwlab/rewrite.hpp"

using namespace rwlab;
using namespace rwlab::testing;

namespace {
  std::vector<std::pair<std::size_t, std::string>> redexes(std::string const& w,
                                                           std::string_view p) {
    std::vector<std::pair<std::size_t, std::string>> out;
    for (auto const& r : find_redexes(word(w, p), *preset(p))) {
      out.emplace_back(r.position, r.rule->name);
    }
    return out;
  }

  using Redexes = std::vector<std::pair<std::size_t, std::string>>;
}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("redexes") {
    CHECK(redexes("a a'", "Q") == Redexes{{0, "I_a"}});
    CHECK(redexes("h h a", "Q") == Redexes{{0, "Z_a"}});
    CHECK(redexes("a h", "Q") == Redexes{{0, "K_a"}});
    CHECK(redexes("h b a b", "Q").empty());
    CHECK(redexes("h b a b", "Qbar") == Redexes{{0, "Cbar_++[b]"}});
  }

  TEST_CASE("single rewrites in both directions") {
    auto const& q   = *preset("Q");
    Redex const i_a{0, q.find_rule("I_a")};
    CHECK(rewrite_at(word("a a' b"), i_a) == word("b"));
    CHECK(rewrite_at(word("b"), i_a, Sign::minus) == word("a a' b"));
    CHECK(rewrite_at(word("h a b"), Redex{0, q.find_rule("C_++")}) == word("h b a"));
    CHECK_THROWS_AS(rewrite_at(word("b a"), i_a), Error);
  }

  TEST_CASE("normal forms") {
    auto const& qbar = *preset("Qbar");
    CHECK(normalize(word("a a' b"), qbar) == word("b"));
    CHECK(normalize(word("a h b a"), qbar) == word("h b a a"));
    CHECK(normalize(word("b a h h"), qbar) == word("h h"));
    CHECK(normalize(word("a h b"), *preset("Q")) == word("h b a"));
  }

  TEST_CASE("an unoriented system is refused") {
    auto const p = parse_presentation("letters a b\norder a b\nrule R : b -> a\n");
    CHECK_THROWS_WITH_AS(normalize(p.alphabet().parse_word("b"), p),
                         "not orientable; termination not guaranteed", Error);
    NormalizeOptions lax;
    lax.require_orientation = false;
    CHECK(normalize(p.alphabet().parse_word("b b"), p, lax)
          == p.alphabet().parse_word("a a"));
  }

  TEST_CASE("shortlex") {
    auto const& o = preset("Qbar")->effective_ordering();
    CHECK(compare_shortlex(word("a a'"), word(""), o) == std::strong_ordering::greater);
    CHECK(compare_shortlex(word("a h"), word("h a"), o) == std::strong_ordering::greater);
    CHECK(compare_shortlex(word("h a b"), word("h b a"), o)
          == std::strong_ordering::greater);
    CHECK(compare_shortlex(word("b"), word("b"), o) == std::strong_ordering::equal);
    CHECK(compare_shortlex(word("h"), word("a b"), o) == std::strong_ordering::less);
  }

  TEST_CASE("enumerated normal forms") {
    auto const& qbar = *preset("Qbar");
    CHECK(enumerate_normal_forms(qbar, 0) == std::vector<Word>{Word()});
    CHECK(enumerate_normal_forms(qbar, 1).size() == 6);
    auto const two = enumerate_normal_forms(qbar, 2);
    CHECK(two.size() == 23);
    for (char const* w : {"h a", "h a'", "h b", "h b'", "h h", "a b", "b' a'"}) {
      CHECK(std::find(two.begin(), two.end(), word(w)) != two.end());
    }
    CHECK(std::is_sorted(two.begin(), two.end(), ShortlexLess{&qbar.effective_ordering()}));
  }

  TEST_CASE("enumerated normal forms are exactly the irreducible words") {
    auto const& qbar = *preset("Qbar");
    auto const  nfs  = enumerate_normal_forms(qbar, 6);
    std::set<Word> const set(nfs.begin(), nfs.end());
    std::size_t          irreducible = 0;
    for (auto const& w : all_words(monoid_letters(), 6)) {
      bool const irr = find_redexes(w, qbar).empty();
      irreducible += irr;
      REQUIRE(irr == set.contains(w));
    }
    CHECK(irreducible == nfs.size());
  }

  TEST_CASE("normalization is idempotent, decreasing and traced") {
    auto const& qbar = *preset("Qbar");
    auto const& o    = qbar.effective_ordering();
    for (auto const& w : all_words(monoid_letters(), 6)) {
      Word const n = normalize(w, qbar);
      REQUIRE(normalize(n, qbar) == n);
      REQUIRE(compare_shortlex(n, w, o) != std::strong_ordering::greater);
      Reduction const r = reduce(w, qbar);
      REQUIRE(r.result == n);
      Word current = w;
      for (auto const& s : r.steps) {
        current = rewrite_at(current, Redex{s.position, s.rule});
        REQUIRE(current == s.result);
      }
      REQUIRE(current == n);
    }
  }

  TEST_CASE("normal forms have the expected shapes") {
    auto const& qbar = *preset("Qbar");
    for (auto const& w : all_words(monoid_letters(), 8)) {
      REQUIRE(in_prop31_normal_forms(normalize(w, qbar)));
    }
  }

  TEST_CASE("trace format") {
    auto const& q = *preset("Q");
    CHECK(format_reduction(reduce(word("a h b"), q), q.alphabet())
          == "a h b --K_a@0--> h a b\nh a b --C_++@0--> h b a\n");
  }
}
