#include "support.hpp"

#include "rwlab/error.hpp"
#include "rwlab/squier.hpp"

using namespace rwlab;
using namespace rwlab::testing;

namespace {
  RulePtr rule(std::string_view name, std::string_view p = "Q") {
    auto r = preset(p)->find_rule(name);
    REQUIRE(r);
    return r;
  }

  //! A random path of up to \p n edges over Q starting at a random word.
  Path random_path(std::mt19937_64& rng, std::size_t n) {
    auto const& q = *preset("Q");
    Path        p(random_word(rng, monoid_letters(), 5));
    for (std::size_t i = 0; i < n; ++i) {
      auto es = edges_at(p.end(), q);
      std::erase_if(es, [](Edge const& e) { return e.target().size() > 10; });
      if (es.empty()) {
        break;
      }
      p = compose(p, single(es[rng() % es.size()]));
    }
    return p;
  }
}  // namespace

TEST_SUITE("squier") {
  TEST_CASE("edge endpoints") {
    auto const ka = edge_endpoints(Edge{word("b"), rule("K_a"), Sign::plus, word("")});
    CHECK(ka == std::pair{word("b a h"), word("b h a")});
    auto const ia = edge_endpoints(Edge{word(""), rule("I_a"), Sign::minus, word("b")});
    CHECK(ia == std::pair{word("b"), word("a a' b")});
    auto const c = edge_endpoints(Edge{word(""), rule("C_++"), Sign::plus, word("a")});
    CHECK(c == std::pair{word("h a b a"), word("h b a a")});
  }

  TEST_CASE("composition") {
    Path const k = single(Edge{word(""), rule("K_a"), Sign::plus, word("b")});
    CHECK(compose(Path(word("a h b")), k) == k);
    CHECK(compose(k, Path(word("h a b"))) == k);
    Path const two = compose(k, single(Edge{word(""), rule("C_++"), Sign::plus, word("")}));
    CHECK(two.size() == 2);
    CHECK(two.start() == word("a h b"));
    CHECK(two.end() == word("h b a"));
    CHECK(two.is_positive());
    CHECK_THROWS_AS(compose(two, k), Error);
    CHECK_THROWS_AS(Path(word("a"), {Edge{word(""), rule("I_a"), Sign::plus, word("")}}),
                    Error);
  }

  TEST_CASE("inversion") {
    Path const id(word("a b"));
    CHECK(invert(id) == id);
    Edge const e{word("b"), rule("K_a"), Sign::plus, word("")};
    Path const inv = invert(single(e));
    REQUIRE(inv.size() == 1);
    CHECK(inv.edges()[0] == Edge{word("b"), rule("K_a"), Sign::minus, word("")});
    CHECK_FALSE(inv.is_positive());
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      Path const p = random_path(rng, 5);
      REQUIRE(invert(invert(p)) == p);
      REQUIRE(invert(p).start() == p.end());
    }
  }

  TEST_CASE("whiskering") {
    Path const k = single(Edge{word(""), rule("K_b"), Sign::plus, word("")});
    CHECK(act(word(""), k, word("")) == k);
    Path const ak = act(word("a"), k, word(""));
    CHECK(ak.edges()[0] == Edge{word("a"), rule("K_b"), Sign::plus, word("")});
    CHECK(ak.start() == word("a b h"));

    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
      Path const p  = random_path(rng, 4);
      Path const q  = random_path(rng, 4);
      Word const x  = random_word(rng, monoid_letters(), 3);
      Word const x2 = random_word(rng, monoid_letters(), 3);
      Word const y  = random_word(rng, monoid_letters(), 3);
      Word const y2 = random_word(rng, monoid_letters(), 3);
      REQUIRE(act(x, act(x2, p, y2), y) == act(x + x2, p, y2 + y));
      REQUIRE(act(x, invert(p), y) == invert(act(x, p, y)));
      if (p.end() == q.start()) {
        REQUIRE(act(x, compose(p, q), y) == compose(act(x, p, y), act(x, q, y)));
      }
      Path const pp = compose(p, invert(p));
      REQUIRE(act(x, pp, y) == compose(act(x, p, y), invert(act(x, p, y))));
    }
  }

  TEST_CASE("interchange squares") {
    Edge const e1{word(""), rule("I_a"), Sign::plus, word("")};
    Edge const e2{word(""), rule("I_b"), Sign::plus, word("")};
    Path const sq = interchange_square(e1, e2);
    CHECK(sq.size() == 4);
    CHECK(sq.is_closed());
    CHECK(sq.start() == word("a a' b b'"));

    Edge const k{word(""), rule("K_a"), Sign::plus, word("")};
    Path const sq2 = interchange_square(k, e2);
    CHECK(sq2.is_closed());
    CHECK(sq2.start() == word("a h b b'"));

    Edge const f1{word(""), rule("I_a"), Sign::plus, word("b b'")};
    Edge const f2{word("a a'"), rule("I_b"), Sign::plus, word("")};
    Path const sq3 = interchange_square_at(f1, f2);
    CHECK(sq3 == sq);
    CHECK(interchange_square_at(f2, f1).is_closed());

    Edge const o1{word(""), rule("I_a"), Sign::plus, word("a")};
    Edge const o2{word("a"), rule("I_a'"), Sign::plus, word("")};
    CHECK_THROWS_AS(interchange_square_at(o1, o2), Error);
  }

  TEST_CASE("lifting") {
    auto const& q = *preset("Q");
    Path const  orig = compose(single(Edge{word(""), rule("K_a"), Sign::plus, word("b")}),
                               single(Edge{word(""), rule("C_++"), Sign::plus, word("")}));
    CHECK(lift_path(orig, q, c_realization()) == orig);

    auto const& qbar = *preset("Qbar");
    auto const  inst = std::make_shared<Rule const>(
        instantiate_schema(*qbar.find_schema("Cbar_++"), word("a"), qbar.alphabet()));
    Edge const bar{word("b"), inst, Sign::plus, word("h")};
    Path const lifted = lift_path(single(bar), q, c_realization());
    CHECK(lifted == act(word("b"), build_C_path(word("a"), Sign::plus, Sign::plus), word("h")));
    CHECK(lifted.size() == 3);

    Path const back = lift_path(single(bar.inverse()), q, c_realization());
    CHECK(back == invert(lifted));

    Path const both = lift_path(compose(single(bar), single(bar.inverse())), q, c_realization());
    CHECK(both == compose(lifted, invert(lifted)));

    Realization const none = [](Rule const&) { return std::optional<Path>(); };
    CHECK_THROWS_AS(lift_path(single(bar), q, none), Error);
    Realization const wrong = [](Rule const&) {
      return std::optional<Path>(Path(word("h")));
    };
    CHECK_THROWS_AS(lift_path(single(bar), q, wrong), Error);
  }

  TEST_CASE("edges at a word") {
    auto const es = edges_at(word("a h"), *preset("Q"));
    REQUIRE_FALSE(es.empty());
    CHECK(es.front() == Edge{word(""), rule("K_a"), Sign::plus, word("")});
    for (auto const& e : es) {
      CHECK(e.source() == word("a h"));
    }
  }

  TEST_CASE("path format") {
    Path const k = single(Edge{word(""), rule("K_a"), Sign::plus, word("b")});
    CHECK(format_path(k, preset("Q")->alphabet()) == "a h b --(K_a,+1)@0--> h a b");
  }
}
