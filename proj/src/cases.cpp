#include "rwlab/cases.hpp"

#include <algorithm>
#include <cctype>

#include "rwlab/error.hpp"

namespace rwlab {

  std::string format_family(CtFamily f) {
    return "CT" + std::to_string(static_cast<int>(f));
  }

  CtFamily parse_family(std::string const& text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) {
      return static_cast<char>(std::toupper(c));
    });
    if (t.starts_with("CT")) {
      t = t.substr(2);
    }
    if (t.size() == 1 && t[0] >= '1' && t[0] <= '7') {
      return static_cast<CtFamily>(t[0] - '0');
    }
    throw Error("unknown circuit family \"" + text + "\" (expected CT1..CT7)");
  }

  namespace {
    bool is_group_word(Word const& w) {
      return std::all_of(
          w.begin(), w.end(), [](Letter x) { return x <= letters::b_inv; });
    }

    std::string token(Letter x) {
      static char const* const tokens[] = {"a", "a'", "b", "b'", "h", "z"};
      return x < 6 ? tokens[x] : "?";
    }

    std::string word(Word const& w) {
      if (w.empty()) {
        return "ε";
      }
      std::string result;
      for (Letter x : w) {
        if (!result.empty()) {
          result += ' ';
        }
        result += token(x);
      }
      return result;
    }
  }  // namespace

  void validate(CtParams const& params) {
    if (params.x > letters::b_inv) {
      throw Error("circuit parameter x must be one of a a' b b'");
    }
    for (Word const* w : {&params.w, &params.w1, &params.w2}) {
      if (!is_group_word(*w)) {
        throw Error("circuit word parameters must be over a a' b b'");
      }
    }
    int f = static_cast<int>(params.family);
    if (f < 1 || f > 7) {
      throw Error("unknown circuit family");
    }
  }

  std::string format_params(CtParams const& p) {
    std::string r = format_family(p.family) + "(";
    auto        s = [](Sign x) { return format_sign(x); };
    switch (p.family) {
      case CtFamily::ct1:
        r += "x=" + token(p.x) + ",w1=" + word(p.w1) + ",w2=" + word(p.w2)
             + ",ε=" + s(p.eps) + ",δ=" + s(p.delta);
        break;
      case CtFamily::ct2:
      case CtFamily::ct6:
        r += "x=" + token(p.x);
        break;
      case CtFamily::ct3:
      case CtFamily::ct4:
        r += "w=" + word(p.w) + ",ε=" + s(p.eps) + ",δ=" + s(p.delta);
        break;
      case CtFamily::ct5:
        r += "x=" + token(p.x) + ",w=" + word(p.w) + ",ε=" + s(p.eps)
             + ",δ=" + s(p.delta);
        break;
      case CtFamily::ct7:
        r += "w1=" + word(p.w1) + ",ε1=" + s(p.eps1) + ",δ1=" + s(p.delta1)
             + ",w2=" + word(p.w2) + ",ε2=" + s(p.eps2) + ",δ2=" + s(p.delta2);
        break;
    }
    return r + ")";
  }

  void for_each_ct_params(CtFamily                                    family,
                          std::size_t                                 max_word_len,
                          std::function<void(CtParams const&)> const& f) {
    auto const words = all_words(letters::group, max_word_len);
    CtParams   p;
    p.family = family;
    switch (family) {
      case CtFamily::ct1:
        for (Letter x : letters::group) {
          p.x = x;
          for (auto const& w1 : words) {
            p.w1 = w1;
            for (auto const& w2 : words) {
              p.w2 = w2;
              for (Sign e : both_signs) {
                p.eps = e;
                for (Sign d : both_signs) {
                  p.delta = d;
                  f(p);
                }
              }
            }
          }
        }
        break;
      case CtFamily::ct2:
      case CtFamily::ct6:
        for (Letter x : letters::group) {
          p.x = x;
          f(p);
        }
        break;
      case CtFamily::ct3:
      case CtFamily::ct4:
        for (auto const& w : words) {
          p.w = w;
          for (Sign e : both_signs) {
            p.eps = e;
            for (Sign d : both_signs) {
              p.delta = d;
              f(p);
            }
          }
        }
        break;
      case CtFamily::ct5:
        for (Letter x : letters::group) {
          p.x = x;
          for (auto const& w : words) {
            p.w = w;
            for (Sign e : both_signs) {
              p.eps = e;
              for (Sign d : both_signs) {
                p.delta = d;
                f(p);
              }
            }
          }
        }
        break;
      case CtFamily::ct7:
        for (auto const& w1 : words) {
          p.w1 = w1;
          for (auto const& w2 : words) {
            p.w2 = w2;
            for (Sign e1 : both_signs) {
              p.eps1 = e1;
              for (Sign d1 : both_signs) {
                p.delta1 = d1;
                for (Sign e2 : both_signs) {
                  p.eps2 = e2;
                  for (Sign d2 : both_signs) {
                    p.delta2 = d2;
                    f(p);
                  }
                }
              }
            }
          }
        }
        break;
    }
  }

}  // namespace rwlab
