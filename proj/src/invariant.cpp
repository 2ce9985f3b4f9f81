#include "rwlab/invariant.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "rwlab/error.hpp"

namespace rwlab {

  WeightSpec::WeightSpec(std::map<std::string, int> weights) {
    for (auto& [name, w] : weights) {
      if (w != 0) {
        weights_.emplace(name, w);
      }
    }
  }

  int WeightSpec::weight(std::string const& rule_name) const {
    auto it = weights_.find(rule_name);
    return it == weights_.end() ? 0 : it->second;
  }

  WeightSpec const& k_a_weights() {
    static WeightSpec const ws({{"K_a", 1}, {"K_a'", -1}});
    return ws;
  }

  RingElement partial_derivation(Word const& w, Ambient const& zg) {
    RingElement result(zg);
    for (std::size_t i = 0; i < w.size(); ++i) {
      switch (w[i]) {
        case letters::a:
          result.add_word(w.substr(i + 1), -1);
          break;
        case letters::a_inv:
          result.add_word(w.substr(i + 1), 1);
          break;
        case letters::b:
        case letters::b_inv:
          break;
        default:
          throw Error("∂ is defined on words over a a' b b' only");
      }
    }
    return result;
  }

  RingElement phi_edge(Edge const&       e,
                       WeightSpec const& ws,
                       Ambient const&    ambient) {
    RingElement result(ambient);
    if (int const c = ws.weight(e.rule->name) * to_int(e.sign); c != 0) {
      result.add_word(e.right, c);
    }
    return result;
  }

  RingElement phi_path(Path const&       p,
                       WeightSpec const& ws,
                       Ambient const&    ambient) {
    // Weights are looked up once per rule and equal right contexts are
    // merged before normalizing.
    std::vector<std::pair<Rule const*, int>> weights;
    std::map<Word, long long>                raw;
    for (auto const& e : p.edges()) {
      auto it = std::find_if(weights.begin(), weights.end(),
                             [&](auto const& rw) { return rw.first == e.rule.get(); });
      if (it == weights.end()) {
        weights.emplace_back(e.rule.get(), ws.weight(e.rule->name));
        it = std::prev(weights.end());
      }
      if (it->second != 0) {
        raw[e.right] += it->second * to_int(e.sign);
      }
    }
    RingElement result(ambient);
    for (auto const& [w, c] : raw) {
      if (c != 0) {
        result.add_word(w, c);
      }
    }
    return result;
  }

  namespace {
    using namespace letters;

    // Adds c·u·(b^δa^ε − a^εb^δ).
    void add_commutator_term(RingElement& r,
                             int          c,
                             Word const&  u,
                             Sign         eps,
                             Sign         delta) {
      Letter const x = a_pow(eps);
      Letter const y = b_pow(delta);
      r.add_word(u + y + x, c);
      r.add_word(u + x + y, -c);
    }
  }  // namespace

  RingElement closed_form_ct(CtParams const& params, Ambient const& zg) {
    validate(params);
    RingElement result(zg);
    switch (params.family) {
      case CtFamily::ct1:
        if (is_a_letter(params.x)) {
          int const e = to_int(exponent(params.x));
          add_commutator_term(
              result, e, inv(params.x) + params.w2, params.eps, params.delta);
          add_commutator_term(result, -e, params.w2, params.eps, params.delta);
        }
        break;
      case CtFamily::ct4:
        add_commutator_term(
            result, -to_int(params.eps), Word(), params.eps, params.delta);
        break;
      case CtFamily::ct6:
        if (is_a_letter(params.x)) {
          int const e = to_int(exponent(params.x));
          result.add_word(Word(1, inv(params.x)), e);
          result.add_word(Word(), -e);
        }
        break;
      case CtFamily::ct7: {
        int const e1 = to_int(params.eps1);
        add_commutator_term(result,
                            e1,
                            b_pow(params.delta1) + params.w2,
                            params.eps2,
                            params.delta2);
        add_commutator_term(
            result, -e1, params.w2, params.eps2, params.delta2);
        break;
      }
      case CtFamily::ct2:
      case CtFamily::ct3:
      case CtFamily::ct5:
        break;
    }
    return result;
  }

}  // namespace rwlab
