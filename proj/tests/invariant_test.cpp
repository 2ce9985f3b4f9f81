#include "support.hpp"

#include "rwlab/invariant.hpp"
#include "rwlab/verify.hpp"

using namespace rwlab;
using namespace rwlab::testing;

namespace {
  Ambient zg() {
    return preset("P");
  }

  RingElement element(std::vector<std::pair<std::string, int>> const& terms) {
    RingElement r(zg());
    for (auto const& [w, c] : terms) {
      r.add_word(word(w, "P"), c);
    }
    return r;
  }

  RulePtr rule(std::string_view name) {
    return preset("Q")->find_rule(name);
  }

  // b^δa^ε − a^εb^δ
  RingElement commutator(Sign e, Sign d) {
    Word const ba{letters::b_pow(d), letters::a_pow(e)};
    Word const ab{letters::a_pow(e), letters::b_pow(d)};
    return from_word(ba, zg()) - from_word(ab, zg());
  }

  RingElement phi_C(Word const& w, Sign e, Sign d) {
    return phi_path(build_C_path(w, e, d), k_a_weights(), zg());
  }

  RingElement partial(Word const& w) {
    return partial_derivation(w, zg());
  }

  CtParams params(CtFamily f) {
    CtParams p;
    p.family = f;
    return p;
  }
}  // namespace

TEST_SUITE("invariant") {
  TEST_CASE("derivation") {
    CHECK(partial(word("")).is_zero());
    CHECK(partial(word("a")) == element({{"", -1}}));
    CHECK(partial(word("a'")) == element({{"", 1}}));
    CHECK(partial(word("b")).is_zero());
    CHECK(partial(word("a' b a")) == element({{"b a", 1}, {"", -1}}));
  }

  TEST_CASE("derivation is a right derivation") {
    // ∂(uv) = ∂u·v + ∂v
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
      Word const u = random_word(rng, group_letters(), 6);
      Word const v = random_word(rng, group_letters(), 6);
      REQUIRE(partial(u + v) == right_mul(partial(u), v) + partial(v));
    }
  }

  TEST_CASE("edge invariant") {
    CHECK(phi_edge(Edge{word("b"), rule("K_a"), Sign::plus, word("a b")}, k_a_weights(), zg())
          == element({{"a b", 1}}));
    CHECK(phi_edge(Edge{word(""), rule("I_a"), Sign::plus, word("b")}, k_a_weights(), zg())
              .is_zero());
    CHECK(phi_edge(Edge{word(""), rule("K_a'"), Sign::minus, word("b")}, k_a_weights(), zg())
          == element({{"b", 1}}));
  }

  TEST_CASE("path invariant") {
    CHECK(phi_path(Path(word("a h")), k_a_weights(), zg()).is_zero());
    CHECK(phi_C(word("a"), Sign::plus, Sign::plus) == element({{"b a", 1}, {"a b", -1}}));
    CtParams ct6 = params(CtFamily::ct6);
    ct6.x        = letters::a;
    CHECK(show(phi_path(build_ct_circuit(ct6), k_a_weights(), zg())) == "+ a' − ε");
  }

  TEST_CASE("closed forms") {
    CHECK(show(closed_form_ct(params(CtFamily::ct4), zg())) == "+ a b − b a");

    CtParams ct1 = params(CtFamily::ct1);
    for (Letter x : {letters::b, letters::b_inv}) {
      ct1.x  = x;
      ct1.w1 = word("a b", "P");
      ct1.w2 = word("b'", "P");
      CHECK(closed_form_ct(ct1, zg()).is_zero());
    }

    RingElement const expected = element({{"b b a", 1}, {"b a b", -1}, {"b a", -1}, {"a b", 1}});
    CHECK(closed_form_ct(params(CtFamily::ct7), zg()) == expected);
    CHECK(closed_form_ct(params(CtFamily::ct2), zg()).is_zero());
  }

  TEST_CASE("identity (i)") {
    for (Letter x : letters::group) {
      Path const k = single(Edge{Word(), rule("K_" + preset("Q")->alphabet().token(x)),
                                 Sign::plus, Word()});
      REQUIRE(phi_path(k, k_a_weights(), zg()) == negate(partial(Word{x})));
    }
  }

  TEST_CASE("identities (ii) to (iv) up to length 6") {
    auto const words = all_words(group_letters(), 6);
    for (Sign e : both_signs) {
      for (Sign d : both_signs) {
        std::map<Word, RingElement> phi;
        for (auto const& w : words) {
          RingElement const v = phi_C(w, e, d);
          REQUIRE(v == negate(multiply(partial(w), commutator(e, d))));
          phi.emplace(w, v);
        }
        for (auto const& w1 : words) {
          for (auto const& w2 : words) {
            if (w1.size() + w2.size() > 6) {
              continue;
            }
            // (iii) is the case |w1| = 1 of (iv)
            RingElement const rhs
                = phi.at(w2) - multiply(right_mul(partial(w1), w2), commutator(e, d));
            REQUIRE(phi.at(w1 + w2) == rhs);
          }
        }
      }
    }
  }

  TEST_CASE("the invariant is compatible with whiskering, inversion and squares") {
    auto const&     q    = *preset("Q");
    Ambient const   zm   = preset("Qbar");
    std::mt19937_64 rng(32);
    auto const      letters = monoid_letters();
    for (int i = 0; i < 300; ++i) {
      Path p(random_word(rng, letters, 5));
      for (int k = 0; k < 5; ++k) {
        auto es = edges_at(p.end(), q);
        std::erase_if(es, [](Edge const& e) { return e.target().size() > 10; });
        if (es.empty()) {
          break;
        }
        p = compose(p, single(es[rng() % es.size()]));
      }
      Word const        alpha = random_word(rng, letters, 3);
      Word const        beta  = random_word(rng, letters, 3);
      RingElement const v     = phi_path(p, k_a_weights(), zm);
      REQUIRE(phi_path(act(alpha, p, beta), k_a_weights(), zm) == right_mul(v, beta));
      REQUIRE(phi_path(compose(p, invert(p)), k_a_weights(), zm).is_zero());
      REQUIRE(phi_path(invert(p), k_a_weights(), zm) == negate(v));
    }
    REQUIRE(verify_homotopy(200, 200, 33).all_pass());
  }
}
