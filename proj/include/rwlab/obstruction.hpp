#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cases.hpp"
#include "ring.hpp"

namespace rwlab {

  //! (#b) − (#b') in a word over a a' b b'.  Throws Error on other letters.
  std::int64_t b_exponent(Word const& w);

  //! (#a) − (#a') in a word over a a' b b'.  Throws Error on other letters.
  std::int64_t a_exponent(Word const& w);

  //! Membership of the element of the free group represented by \p w in
  //! the subgroup generated by a and the commutator subgroup.  Since the
  //! quotient by the commutator subgroup is free abelian on the images of
  //! a and b, this holds exactly when the b-exponent sum is zero.
  bool hn_member(Word const& w);

  //! 1 − (w a^ε b^δ a^{-ε} b^{-δ} w⁻¹) in the free group ring.
  RingElement x_generator(Word const& w, Sign eps, Sign delta);

  //! 1 − a.
  RingElement x_generator_a();

  //! A finite integer combination of the cosets of the subgroup of
  //! hn_member, the coset of g indexed by b_exponent(g).  No zero entry is
  //! stored.
  struct CosetVector {
    std::map<std::int64_t, Integer> entries;

    bool is_zero() const noexcept {
      return entries.empty();
    }
    bool operator==(CosetVector const&) const = default;
  };

  //! `0`, or `{k: c, ...}` with signed coefficients.
  std::string format_coset_vector(CosetVector const& v);

  //! The image of the base coset under the right action of \p lambda.
  CosetVector basepoint_apply(RingElement const& lambda);

  //! Identifies x_generator(w, eps, delta), or x_generator_a when w is
  //! not set.
  struct XGenerator {
    std::optional<Word> w;
    Sign                eps   = Sign::plus;
    Sign                delta = Sign::plus;

    bool operator==(XGenerator const&) const = default;
  };

  //! sign · (image of source) · multiplier, where the image of a circuit is
  //! its path invariant and the image of an XGenerator its ring element.
  struct WitnessTerm {
    std::variant<CtParams, XGenerator> source;
    Word                               multiplier;
    Sign                               sign = Sign::plus;
  };

  struct Witness {
    std::vector<WitnessTerm> terms;
    RingElement              target;
    bool                     verified = false;
  };

  //! The signed sum of the term images.  Circuit terms are evaluated by
  //! building the circuit and applying phi_path with k_a_weights.
  RingElement witness_sum(Witness const& w);

  //! Terms whose images sum to w·(b^δa^ε − a^εb^δ), following the
  //! induction on w through CT4, CT1 and CT7.  Throws Error if \p w is not
  //! a freely reduced word over a a' b b', or if the check fails.
  Witness commutator_witness(Word const& w, Sign eps, Sign delta);

  //! Expresses closed_form_ct(params) through right multiples of the X
  //! generators.  Throws Error if the check fails.
  Witness phi_to_x_witness(CtParams const& params);

  //! `CT1(...)`, `X(w=...,ε=...,δ=...)` or `X(1−a)`.
  std::string format_source(WitnessTerm const& t);

  //! One line `<sign> <source> * <word>` per term, then `target: <elt>`
  //! and `verified: true|false`.
  std::string format_witness(Witness const& w);

}  // namespace rwlab
