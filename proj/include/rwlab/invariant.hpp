#pragma once

#include <map>
#include <string>

#include "cases.hpp"
#include "ring.hpp"
#include "squier.hpp"

namespace rwlab {

  //! Integer weights on rule names; unlisted rules weigh 0.
  class WeightSpec {
   public:
    WeightSpec() = default;
    explicit WeightSpec(std::map<std::string, int> weights);

    int weight(std::string const& rule_name) const;

    std::map<std::string, int> const& weights() const noexcept {
      return weights_;
    }

   private:
    std::map<std::string, int> weights_;
  };

  //! {K_a: +1, K_a': -1}, the weights defining the path invariant of the
  //! case study.
  WeightSpec const& k_a_weights();

  //! ∂w = Σ c(w_i)·w_{i+1}···w_n with c(a) = -1, c(a') = 1 and
  //! c(b) = c(b') = 0.  Throws Error if \p w contains a letter other than
  //! a a' b b'.
  RingElement partial_derivation(Word const& w, Ambient const& zg);

  //! sign · weight(rule) · (normal form of the right context).
  RingElement phi_edge(Edge const&       e,
                       WeightSpec const& ws,
                       Ambient const&    ambient);

  //! The sum of phi_edge over the edges of \p p.
  RingElement phi_path(Path const&       p,
                       WeightSpec const& ws,
                       Ambient const&    ambient);

  //! The image of the circuit of \p params under the path invariant, by
  //! the closed formula of its family.  With D = b^δa^ε − a^εb^δ:
  //!
  //! - CT1: e(a^{-e} − 1)·w2·D if x = a^e, otherwise 0
  //! - CT2, CT3, CT5: 0
  //! - CT4: −ε·D
  //! - CT6: e(a^{-e} − 1) if x = a^e, otherwise 0
  //! - CT7: ε1(b^{δ1} − 1)·w2·(b^{δ2}a^{ε2} − a^{ε2}b^{δ2})
  RingElement closed_form_ct(CtParams const& params, Ambient const& zg);

}  // namespace rwlab
