#include "support.hpp"

#include "rwlab/error.hpp"
#include "rwlab/obstruction.hpp"
#include "rwlab/verify.hpp"

using namespace rwlab;
using namespace rwlab::testing;

namespace {
  Word gw(std::string const& text) {
    return word(text, "P");
  }

  RingElement element(std::vector<std::pair<std::string, int>> const& terms) {
    RingElement r(preset("P"));
    for (auto const& [w, c] : terms) {
      r.add_word(gw(w), c);
    }
    return r;
  }

  bool freely_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == letters::inv(w[i - 1])) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_SUITE("obstruction") {
  TEST_CASE("exponent sums") {
    CHECK(b_exponent(gw("b a b'")) == 0);
    CHECK(b_exponent(gw("b b a")) == 2);
    CHECK(b_exponent(gw("")) == 0);
    CHECK(a_exponent(gw("a' a' b")) == -2);
    CHECK_THROWS_AS(b_exponent(word("h")), Error);
  }

  TEST_CASE("exponent sums are homomorphisms invariant under free reduction") {
    std::mt19937_64 rng(41);
    auto const&     p = *preset("P");
    for (int i = 0; i < 1000; ++i) {
      Word const u = random_word(rng, group_letters(), 8);
      Word const v = random_word(rng, group_letters(), 8);
      REQUIRE(b_exponent(u + v) == b_exponent(u) + b_exponent(v));
      REQUIRE(a_exponent(u + v) == a_exponent(u) + a_exponent(v));
      REQUIRE(b_exponent(normalize(u, p)) == b_exponent(u));
    }
  }

  TEST_CASE("subgroup membership") {
    CHECK_FALSE(hn_member(gw("b")));
    CHECK(hn_member(gw("a")));
    CHECK(hn_member(gw("a b a' b'")));
    CHECK_FALSE(hn_member(gw("b b a")));
  }

  TEST_CASE("the generators of the ideal") {
    CHECK(x_generator(gw(""), Sign::plus, Sign::plus) == element({{"", 1}, {"a b a' b'", -1}}));
    CHECK(x_generator_a() == element({{"", 1}, {"a", -1}}));
    CHECK(x_generator(gw("b"), Sign::plus, Sign::plus)
          == element({{"", 1}, {"b a b a' b' b'", -1}}));
  }

  TEST_CASE("action on the cosets") {
    CHECK(basepoint_apply(x_generator_a()).is_zero());
    auto const v = basepoint_apply(element({{"", 1}, {"b", -1}}));
    CHECK(format_coset_vector(v) == "{0: +1, 1: -1}");
    CHECK(basepoint_apply(x_generator(gw("b a"), Sign::plus, Sign::minus)).is_zero());
    CHECK(format_coset_vector(CosetVector{}) == "0");
  }

  TEST_CASE("commutator witnesses") {
    auto const base = commutator_witness(Word(), Sign::plus, Sign::plus);
    REQUIRE(base.terms.size() == 1);
    auto const* ct = std::get_if<CtParams>(&base.terms[0].source);
    REQUIRE(ct != nullptr);
    CHECK(ct->family == CtFamily::ct4);
    CHECK(base.terms[0].sign == Sign::minus);
    CHECK(base.target == element({{"b a", 1}, {"a b", -1}}));
    CHECK(base.verified);

    auto const a = commutator_witness(gw("a"), Sign::plus, Sign::plus);
    CHECK(a.target == element({{"a b a", 1}, {"a a b", -1}}));
    CHECK(a.verified);
    CHECK(a.terms.size() == 2);

    auto const b = commutator_witness(gw("b"), Sign::plus, Sign::plus);
    CHECK(b.target == element({{"b b a", 1}, {"b a b", -1}}));
    CHECK(b.verified);
    bool uses_ct7 = false;
    for (auto const& t : b.terms) {
      auto const* p = std::get_if<CtParams>(&t.source);
      uses_ct7      = uses_ct7 || (p && p->family == CtFamily::ct7);
    }
    CHECK(uses_ct7);

    CHECK_THROWS_AS(commutator_witness(gw("a a'"), Sign::plus, Sign::plus), Error);
  }

  TEST_CASE("commutator witnesses for every reduced word up to length 5") {
    for (auto const& w : all_words(group_letters(), 5)) {
      if (!freely_reduced(w)) {
        continue;
      }
      for (Sign e : both_signs) {
        for (Sign d : both_signs) {
          auto const wit = commutator_witness(w, e, d);
          REQUIRE(wit.verified);
          REQUIRE(witness_sum(wit) == wit.target);
        }
      }
    }
  }

  TEST_CASE("circuit invariants in terms of the generators") {
    CtParams ct2;
    ct2.family    = CtFamily::ct2;
    auto const w2 = phi_to_x_witness(ct2);
    CHECK(w2.terms.empty());
    CHECK(w2.target.is_zero());
    CHECK(w2.verified);

    CtParams ct6;
    ct6.family    = CtFamily::ct6;
    auto const w6 = phi_to_x_witness(ct6);
    REQUIRE(w6.terms.size() == 1);
    CHECK(std::get<XGenerator>(w6.terms[0].source) == XGenerator{});
    CHECK(w6.target == element({{"a'", 1}, {"", -1}}));

    CtParams ct4;
    ct4.family    = CtFamily::ct4;
    auto const w4 = phi_to_x_witness(ct4);
    REQUIRE(w4.terms.size() == 1);
    CHECK(w4.terms[0].multiplier == gw("b a"));
    CHECK(w4.terms[0].sign == Sign::minus);
    CHECK(w4.target == element({{"a b", 1}, {"b a", -1}}));
    CHECK(format_witness(w4) == "− X(w=ε,ε=+1,δ=+1) * b a\ntarget: + a b − b a\nverified: true\n");
  }

  TEST_CASE("circuit invariants lie in the ideal for word slots up to 4") {
    for (CtFamily f : all_ct_families) {
      CAPTURE(format_family(f));
      for_each_ct_params(f, 4, [](CtParams const& p) {
        REQUIRE(phi_to_x_witness(p).verified);
      });
    }
  }

  TEST_CASE("the obstruction sweep") {
    CHECK(verify_obstruction(3, 2, 4, 10).all_pass());
  }
}
