#include "support.hpp"

#include "rwlab/error.hpp"
#include "rwlab/obstruction.hpp"
#include "rwlab/structure.hpp"
#include "rwlab/verify.hpp"

using namespace rwlab;
using namespace rwlab::testing;

namespace {
  Presentation const& m() {
    return *preset("M4");
  }

  Word mw(std::string const& text) {
    return word(text, "M4");
  }
}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("H-classes") {
    auto const& qbar = *preset("Qbar");
    CHECK(classify(word("a b"), qbar) == HClass::units);
    CHECK(classify(word("b h a"), qbar) == HClass::hh);
    CHECK(classify(word("h a h"), qbar) == HClass::zero);
    CHECK(classify(mw("h h"), m()) == HClass::zero);
    CHECK(classify(mw("z"), m()) == HClass::zero);
    CHECK(format_hclass(HClass::hh) == "Hh");
    CHECK_THROWS_AS(classify(word("a", "P"), *preset("P")), Error);
  }

  TEST_CASE("H-classes form a chain of ideals") {
    auto const& qbar  = *preset("Qbar");
    auto const  words = all_words(monoid_letters(), 4);
    std::vector<HClass> cls;
    for (auto const& w : words) {
      cls.push_back(classify(w, qbar));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        HClass const c = classify(words[i] + words[j], qbar);
        REQUIRE(c >= cls[i]);
        REQUIRE(c >= cls[j]);
      }
    }
  }

  TEST_CASE("the congruence on the class of h") {
    CHECK(sigma_equal(word("a b"), word("b a")));
    CHECK_FALSE(sigma_equal(word("a"), word("b")));
    CHECK(sigma_equal(word("a b a' b'"), word("")));
  }

  TEST_CASE("the congruence is equality of exponent sums up to length 6") {
    auto const words = all_words(group_letters(), 6);
    std::vector<Word>                                  keys;
    std::vector<std::pair<std::int64_t, std::int64_t>> sums;
    for (auto const& w : words) {
      keys.push_back(sigma_key(w));
      sums.emplace_back(a_exponent(w), b_exponent(w));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        REQUIRE((keys[i] == keys[j]) == (sums[i] == sums[j]));
      }
    }
  }

  TEST_CASE("Cayley balls") {
    auto const& qbar = *preset("Qbar");
    Ball const  one  = cayley_ball(qbar, Word(), 1);
    CHECK(one.distances.size() == 6);
    CHECK(one.distances.at(Word()) == 0);
    for (char const* x : {"a", "a'", "b", "b'", "h"}) {
      CHECK(one.distances.at(word(x)) == 1);
    }
    Ball const zero = cayley_ball(qbar, word("h h"), 3);
    CHECK(zero.distances.size() == 1);
    CHECK(zero.distances.at(word("h h")) == 0);
    CHECK(zero.exhausted);
    Ball const two = cayley_ball(qbar, Word(), 2);
    CHECK(two.distances.at(word("h h")) == 2);
    CHECK(format_ball(one, qbar).rfind("0\tε\n", 0) == 0);
    // With the extra letter the zero is one step away.
    CHECK(cayley_ball(m(), Word(), 1).distances.at(mw("z")) == 1);
  }

  TEST_CASE("directed distances") {
    auto const& qbar = *preset("Qbar");
    CHECK(d_A(qbar, word("a"), Word(), 2).value == 1);
    Distance const none = d_A(qbar, word("h h"), Word(), 4);
    CHECK_FALSE(none.value);
    CHECK(none.infinite);
    CHECK(d_A(qbar, Word(), word("h b a"), 4).value == 3);
    CHECK(format_distance(none) == "infinite");
    CHECK(d_A(qbar, Word(), word("h h"), 1).value == std::nullopt);
  }

  TEST_CASE("distances satisfy the triangle inequality and the step bound") {
    std::size_t const r     = 3;
    Ball const        ball  = cayley_ball(m(), Word(), r);
    std::vector<Word> verts;
    for (auto const& [w, d] : ball.distances) {
      verts.push_back(w);
    }
    std::map<Word, Ball> from;
    for (auto const& u : verts) {
      from.emplace(u, cayley_ball(m(), u, r));
    }
    auto dist = [&](Word const& x, Word const& y) -> std::optional<std::size_t> {
      auto const& d  = from.at(x).distances;
      auto const  it = d.find(y);
      return it == d.end() ? std::nullopt : std::optional(it->second);
    };
    for (auto const& x : verts) {
      for (auto const& y : verts) {
        for (auto const& z : verts) {
          auto const xy = dist(x, y), yz = dist(y, z), xz = dist(x, z);
          if (xy && yz && xz) {
            REQUIRE(*xz <= *xy + *yz);
          }
        }
      }
    }
    for (auto const& [u, d] : ball.distances) {
      if (d + 1 > r) {
        continue;
      }
      for (Letter g : m().alphabet().letters()) {
        Word const v = normalize(u + Word{g}, m());
        REQUIRE(dist(u, v).value_or(99) <= 1);
      }
    }
  }

  TEST_CASE("isometry of the two systems") {
    auto const& n = *preset("N4");
    CHECK(isometry_check(m(), n, 3).pass);
    CHECK(isometry_check(m(), n, 4).pass);
    auto const bad = isometry_check(*preset("Q"), *preset("P"), 2);
    CHECK_FALSE(bad.pass);
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations[0] == "vertex sets differ");
  }

  TEST_CASE("the two systems have the same normal forms") {
    auto const mf = enumerate_normal_forms(m(), 6);
    auto const nf = enumerate_normal_forms(*preset("N4"), 6);
    CHECK(std::set<Word>(mf.begin(), mf.end()) == std::set<Word>(nf.begin(), nf.end()));
  }

  TEST_CASE("stabilizer grid") {
    CHECK(stabilizer_grid_check(5).empty());
    CHECK(verify_structure(4, 4, 3).all_pass());
  }
}
