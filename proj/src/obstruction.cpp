#include "rwlab/obstruction.hpp"

#include <sstream>

#include "rwlab/casestudy.hpp"
#include "rwlab/error.hpp"
#include "rwlab/invariant.hpp"

namespace rwlab {

  using namespace letters;

  namespace {
    Ambient const& zg() {
      static Ambient const p = preset("P");
      return p;
    }

    void check_group_word(Word const& w) {
      for (Letter x : w) {
        if (x > b_inv) {
          throw Error("expected a word over a a' b b'");
        }
      }
    }

    bool freely_reduced(Word const& w) {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == inv(w[i - 1])) {
          return false;
        }
      }
      return true;
    }

    Word inverse_word(Word const& w) {
      Word r;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        r.push_back(inv(*it));
      }
      return r;
    }
  }  // namespace

  std::int64_t b_exponent(Word const& w) {
    check_group_word(w);
    return static_cast<std::int64_t>(count(w, b))
           - static_cast<std::int64_t>(count(w, b_inv));
  }

  std::int64_t a_exponent(Word const& w) {
    check_group_word(w);
    return static_cast<std::int64_t>(count(w, a))
           - static_cast<std::int64_t>(count(w, a_inv));
  }

  bool hn_member(Word const& w) {
    return b_exponent(w) == 0;
  }

  RingElement x_generator(Word const& w, Sign eps, Sign delta) {
    check_group_word(w);
    Letter const x = a_pow(eps), y = b_pow(delta);
    RingElement  r = ring_one(zg());
    r.add_word(w + x + y + inv(x) + inv(y) + inverse_word(w), -1);
    return r;
  }

  RingElement x_generator_a() {
    RingElement r = ring_one(zg());
    r.add_word(Word{a}, -1);
    return r;
  }

  std::string format_coset_vector(CosetVector const& v) {
    if (v.is_zero()) {
      return "0";
    }
    std::string r = "{";
    for (auto const& [k, c] : v.entries) {
      if (r.size() > 1) {
        r += ", ";
      }
      r += std::to_string(k) + ": " + (c > 0 ? "+" : "") + c.str();
    }
    return r + "}";
  }

  CosetVector basepoint_apply(RingElement const& lambda) {
    CosetVector v;
    for (auto const& [w, c] : lambda.terms()) {
      auto& entry = v.entries[b_exponent(w)];
      entry += c;
      if (entry == 0) {
        v.entries.erase(b_exponent(w));
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  namespace {
    RingElement image(WitnessTerm const& t) {
      if (auto const* p = std::get_if<CtParams>(&t.source)) {
        return phi_path(build_ct_circuit(*p), k_a_weights(), zg());
      }
      auto const& x = std::get<XGenerator>(t.source);
      return x.w ? x_generator(*x.w, x.eps, x.delta) : x_generator_a();
    }

    void verify(Witness& w, char const* what) {
      w.verified = witness_sum(w) == w.target;
      if (!w.verified) {
        throw Error(std::string(what) + ": witness does not sum to its target");
      }
    }

    // u·(b^δa^ε − a^εb^δ).
    RingElement commutator_times(Word const& u, Sign eps, Sign delta) {
      RingElement r(zg());
      r.add_word(u + b_pow(delta) + a_pow(eps), 1);
      r.add_word(u + a_pow(eps) + b_pow(delta), -1);
      return r;
    }
  }  // namespace

  RingElement witness_sum(Witness const& w) {
    RingElement sum(zg());
    for (auto const& t : w.terms) {
      auto const term = right_mul(image(t), t.multiplier);
      if (t.sign == Sign::plus) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    return sum;
  }

  Witness commutator_witness(Word const& w, Sign eps, Sign delta) {
    check_group_word(w);
    if (!freely_reduced(w)) {
      throw Error("commutator_witness needs a freely reduced word");
    }
    Witness result{{}, commutator_times(w, eps, delta), false};
    // Base: D = −ε·Φ(CT4(ε, ε, δ)).
    CtParams base;
    base.family = CtFamily::ct4;
    base.eps    = eps;
    base.delta  = delta;
    result.terms.push_back({base, Word(), -eps});
    // Peel w from the right: for each suffix c·s of w, (c·s)D = sD + term.
    for (std::size_t i = w.size(); i-- > 0;) {
      Letter const c = w[i];
      Word const   s = w.substr(i + 1);
      CtParams     p;
      p.eps   = eps;
      p.delta = delta;
      if (is_a_letter(c)) {
        // Φ(CT1(x = a^e, w2 = c·s)) = e·sD − e·(c·s)D.
        p.family = CtFamily::ct1;
        p.x      = c;
        p.w2     = c + s;
        result.terms.push_back({p, Word(), -exponent(c)});
      } else {
        // Φ(CT7(ε1 = +1, δ1 = e, w2 = s)) = (c·s)D − sD.
        p.family = CtFamily::ct7;
        p.eps1   = Sign::plus;
        p.delta1 = exponent(c);
        p.w2     = s;
        p.eps2   = eps;
        p.delta2 = delta;
        result.terms.push_back({p, Word(), Sign::plus});
      }
    }
    verify(result, "commutator_witness");
    return result;
  }

  Witness phi_to_x_witness(CtParams const& p) {
    validate(p);
    Witness result{{}, closed_form_ct(p, zg()), false};
    // u·(b^δa^ε − a^εb^δ) = X(u, ε, δ)·(u b^δ a^ε).
    auto add = [&result](Word const& u, Sign eps, Sign delta, Sign sign) {
      result.terms.push_back({XGenerator{u, eps, delta},
                              u + b_pow(delta) + a_pow(eps),
                              sign});
    };
    switch (p.family) {
      case CtFamily::ct1:
        if (is_a_letter(p.x)) {
          Sign const e = exponent(p.x);
          add(inv(p.x) + p.w2, p.eps, p.delta, e);
          add(p.w2, p.eps, p.delta, -e);
        }
        break;
      case CtFamily::ct4:
        add(Word(), p.eps, p.delta, -p.eps);
        break;
      case CtFamily::ct6:
        if (p.x == a) {
          // a' − 1 = (1 − a)·a'.
          result.terms.push_back({XGenerator{}, Word{a_inv}, Sign::plus});
        } else if (p.x == a_inv) {
          // −(a − 1) = (1 − a).
          result.terms.push_back({XGenerator{}, Word(), Sign::plus});
        }
        break;
      case CtFamily::ct7:
        add(b_pow(p.delta1) + p.w2, p.eps2, p.delta2, p.eps1);
        add(p.w2, p.eps2, p.delta2, -p.eps1);
        break;
      case CtFamily::ct2:
      case CtFamily::ct3:
      case CtFamily::ct5:
        break;
    }
    verify(result, "phi_to_x_witness");
    return result;
  }

  std::string format_source(WitnessTerm const& t) {
    if (auto const* p = std::get_if<CtParams>(&t.source)) {
      return format_params(*p);
    }
    auto const& x = std::get<XGenerator>(t.source);
    if (!x.w) {
      return "X(1−a)";
    }
    return "X(w=" + zg()->alphabet().format(*x.w) + ",ε=" + format_sign(x.eps)
           + ",δ=" + format_sign(x.delta) + ")";
  }

  std::string format_witness(Witness const& w) {
    std::ostringstream out;
    for (auto const& t : w.terms) {
      out << (t.sign == Sign::plus ? "+ " : "− ") << format_source(t) << " * "
          << zg()->alphabet().format(t.multiplier) << '\n';
    }
    out << "target: " << format_ring(w.target) << '\n';
    out << "verified: " << (w.verified ? "true" : "false") << '\n';
    return out.str();
  }

}  // namespace rwlab
