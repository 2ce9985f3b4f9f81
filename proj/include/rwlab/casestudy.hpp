#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cases.hpp"
#include "completion.hpp"
#include "ring.hpp"
#include "squier.hpp"

namespace rwlab {

  //! The built-in presentations, all ordered a > a' > b > b' > h > z:
  //!
  //! - P:    the free group on a, b (rules I_x : x x' -> ε)
  //! - Q:    P with h, the rules K_x : x h -> h x, C_<ε><δ> :
  //!         h a^ε b^δ -> h b^δ a^ε and Z_y : h h y -> h h
  //! - Qbar: Q with the schemas Cbar_<ε><δ> : h w a^ε b^δ -> h w b^δ a^ε
  //! - M4:   Qbar with a letter z and h h -> z, completed
  //! - N4:   I, K, C, Cbar, z u -> z and u z -> z, and h h -> h
  struct CasePresentations {
    Ambient           P, Q, Qbar, M4, N4;
    KnuthBendixReport m4_completion;
  };

  //! Built on first use; thread safe.
  CasePresentations const& build_presentations();

  //! The preset named P, Q, Qbar, M4 or N4.  Throws Error otherwise.
  Ambient preset(std::string_view name);

  std::vector<std::string> const& preset_names();

  //! The positive path of length 2|w| + 1 from h w a^ε b^δ to h w b^δ a^ε
  //! over Q that moves h past w with K edges, applies C and moves h back.
  Path build_C_path(Word const& w, Sign eps, Sign delta);

  //! Realizes each Cbar instance by build_C_path.
  Realization const& c_realization();

  //! The closed path over Qbar of the family of \p params, starting at
  //! the source of its critical peak: the right branch followed by the
  //! inverse of the left branch.
  Path build_ct_bar_circuit(CtParams const& params);

  //! build_ct_bar_circuit with every Cbar edge lifted; a closed path
  //! over Q.
  Path build_ct_circuit(CtParams const& params);

  //! The family and parameters of a critical peak of Qbar, if the peak
  //! has the shape of one of CT1-CT7.
  std::optional<CtParams> classify_peak(CriticalPeak const& k);

  //! The normal forms of the case-study monoid: freely reduced words over
  //! a a' b b', h b^j a^k, and h h.
  bool in_prop31_normal_forms(Word const& w);

}  // namespace rwlab
