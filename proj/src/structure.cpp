#include "rwlab/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rwlab/casestudy.hpp"
#include "rwlab/error.hpp"
#include "rwlab/obstruction.hpp"
#include "rwlab/rewrite.hpp"

namespace rwlab {

  std::string format_hclass(HClass c) {
    switch (c) {
      case HClass::units:
        return "Units";
      case HClass::hh:
        return "Hh";
      case HClass::zero:
        return "Zero";
    }
    return "?";
  }

  HClass classify(Word const& w, Presentation const& p) {
    auto const h = p.alphabet().find("h");
    if (!h) {
      throw Error("classify needs a letter h");
    }
    Word const nf = normalize(w, p);
    if (auto z = p.alphabet().find("z"); z && count(nf, *z) > 0) {
      return HClass::zero;
    }
    switch (count(nf, *h)) {
      case 0:
        return HClass::units;
      case 1:
        return HClass::hh;
      default:
        return HClass::zero;
    }
  }

  Word sigma_key(Word const& w) {
    return normalize(letters::h + w, *preset("Qbar"));
  }

  bool sigma_equal(Word const& w1, Word const& w2) {
    for (Word const* w : {&w1, &w2}) {
      for (Letter x : *w) {
        if (x > letters::b_inv) {
          throw Error("sigma_equal expects words over a a' b b'");
        }
      }
    }
    return sigma_key(w1) == sigma_key(w2);
  }

  Ball cayley_ball(Presentation const& p,
                   Word const&         center,
                   std::size_t         radius) {
    Ball b{normalize(center, p), radius, {}, false};
    b.distances.emplace(b.center, 0);
    std::vector<Word> frontier{b.center};
    auto const        letters = p.alphabet().letters();
    for (std::size_t d = 1; d <= radius && !frontier.empty(); ++d) {
      std::vector<Word> next;
      for (auto const& u : frontier) {
        for (Letter g : letters) {
          Word v = normalize(u + g, p);
          if (b.distances.emplace(v, d).second) {
            next.push_back(std::move(v));
          }
        }
      }
      frontier = std::move(next);
    }
    b.exhausted = frontier.empty();
    return b;
  }

  std::string format_ball(Ball const& b, Presentation const& p) {
    std::vector<std::pair<std::size_t, Word>> rows;
    for (auto const& [w, d] : b.distances) {
      rows.emplace_back(d, w);
    }
    ShortlexLess const less{&p.effective_ordering()};
    std::sort(rows.begin(), rows.end(), [&less](auto const& x, auto const& y) {
      return x.first != y.first ? x.first < y.first : less(x.second, y.second);
    });
    std::ostringstream out;
    for (auto const& [d, w] : rows) {
      out << d << '\t' << p.alphabet().format(w) << '\n';
    }
    return out.str();
  }

  std::string format_distance(Distance const& d) {
    if (d.value) {
      return std::to_string(*d.value);
    }
    return d.infinite ? "infinite" : "unreachable within radius";
  }

  Distance d_A(Presentation const& p,
               Word const&         x,
               Word const&         y,
               std::size_t         radius) {
    Ball const b  = cayley_ball(p, x, radius);
    auto const it = b.distances.find(normalize(y, p));
    if (it != b.distances.end()) {
      return Distance{it->second, false};
    }
    return Distance{std::nullopt, b.exhausted};
  }

  namespace {
    // Distances keyed by printed normal forms.
    std::map<std::string, std::size_t> printed(Ball const&         b,
                                               Presentation const& p) {
      std::map<std::string, std::size_t> result;
      for (auto const& [w, d] : b.distances) {
        result.emplace(p.alphabet().format(w), d);
      }
      return result;
    }
  }  // namespace

  IsometryReport isometry_check(Presentation const& p1,
                                Presentation const& p2,
                                std::size_t         radius,
                                std::string const&  center) {
    IsometryReport report;
    Word           c1, c2;
    try {
      c1 = p1.alphabet().parse_word(center);
      c2 = p2.alphabet().parse_word(center);
    } catch (Error const&) {
      report.pass = false;
      report.violations.push_back("centre is not a word of both alphabets");
      return report;
    }
    auto const v1 = printed(cayley_ball(p1, c1, radius), p1);
    auto const v2 = printed(cayley_ball(p2, c2, radius), p2);
    report.vertices = v1.size();
    std::set<std::string> k1, k2;
    for (auto const& [w, d] : v1) {
      k1.insert(w);
    }
    for (auto const& [w, d] : v2) {
      k2.insert(w);
    }
    if (k1 != k2) {
      report.pass = false;
      report.violations.push_back("vertex sets differ");
      return report;
    }
    for (auto const& [w, d] : v1) {
      if (v2.at(w) != d) {
        report.violations.push_back("distance from centre to " + w + " is "
                                    + std::to_string(d) + " vs "
                                    + std::to_string(v2.at(w)));
      }
    }
    for (auto const& u : k1) {
      auto const from1
          = printed(cayley_ball(p1, p1.alphabet().parse_word(u), radius), p1);
      auto const from2
          = printed(cayley_ball(p2, p2.alphabet().parse_word(u), radius), p2);
      for (auto const& v : k1) {
        ++report.pairs_checked;
        auto const i1 = from1.find(v);
        auto const i2 = from2.find(v);
        bool const f1 = i1 != from1.end(), f2 = i2 != from2.end();
        if (f1 != f2 || (f1 && i1->second != i2->second)) {
          auto show = [](bool f, auto it) {
            return f ? std::to_string(it->second) : std::string("none");
          };
          report.violations.push_back("d(" + u + ", " + v + ") is "
                                      + show(f1, i1) + " vs " + show(f2, i2));
        }
      }
    }
    report.pass = report.violations.empty();
    return report;
  }

  std::vector<std::string> stabilizer_grid_check(int bound) {
    using namespace letters;
    auto const&              qbar = *preset("Qbar");
    std::vector<std::string> failures;
    auto power = [](Letter x, int n) {
      return Word(static_cast<std::size_t>(std::abs(n)), n >= 0 ? x : inv(x));
    };
    for (int j = -bound; j <= bound; ++j) {
      for (int k = -bound; k <= bound; ++k) {
        for (Letter x : group) {
          Word const w = h + power(b, j) + power(a, k) + x;
          int const  j2 = j + static_cast<int>(b_exponent(Word{x}));
          int const  k2 = k + static_cast<int>(a_exponent(Word{x}));
          if (normalize(w, qbar) != h + power(b, j2) + power(a, k2)) {
            failures.push_back(qbar.alphabet().format(w));
          }
        }
      }
    }
    return failures;
  }

}  // namespace rwlab
