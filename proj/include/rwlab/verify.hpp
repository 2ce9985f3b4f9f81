#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "invariant.hpp"

namespace rwlab {

  struct ReportLine {
    std::string check;
    bool        pass;
    std::string detail;
  };

  //! A list of named checks, each passing or failing.
  struct Report {
    std::vector<ReportLine> lines;

    void add(std::string check, bool pass, std::string detail = {});
    std::size_t passed() const;
    bool        all_pass() const;
    //! Appends the lines of \p that.
    void append(Report const& that);
  };

  //! `<check>\t<pass|FAIL>\t<detail>` per line and `summary: n/m`; with
  //! \p machine, `check=...\tstatus=...\tdetail=...` and
  //! `summary\tpassed=n\ttotal=m`.
  std::string format_report(Report const& r, bool machine = false);

  //! Compares phi_path of every built circuit with closed_form_ct, word
  //! slots up to max_word_len (CT7 up to ct7_max_word_len), one line per
  //! family.  \p jobs threads share the work; results do not depend on it.
  Report verify_figure2(std::size_t       max_word_len,
                        std::size_t       ct7_max_word_len,
                        WeightSpec const& ws   = k_a_weights(),
                        unsigned          jobs = 1);

  //! Identities (i)-(iv) relating ∂ and Φ on the paths build_C_path:
  //! exhaustively for words up to max_len and on random_tuples random
  //! tuples with words up to random_max_len.
  Report verify_identities(std::size_t   max_len        = 5,
                           std::size_t   random_tuples  = 1000,
                           std::size_t   random_max_len = 8,
                           std::uint64_t seed           = 1);

  //! Normal forms of Qbar for words up to max_len lie in the Prop 3.1
  //! set; Qbar is confluent at schema bound 3; word_problem_equal agrees
  //! with the equivalence oracle (bound oracle_len) on all pairs of words
  //! up to pair_len.
  Report verify_prop31(std::size_t max_len    = 6,
                       std::size_t pair_len   = 4,
                       std::size_t oracle_len = 8);

  //! Qbar confluent at schema bound 3, its peaks with at most one h all of
  //! shape CT1-CT7 (every family present), and Q non-confluent with the
  //! pair (h b a b, h b b a) unresolved.
  Report verify_peaks(std::size_t schema_var_bound = 3);

  //! Every rule of Qbar, schema instances to the bound, is oriented by
  //! the shortlex order.
  Report verify_orientation(std::size_t schema_var_bound = 4);

  //! Knuth-Bendix on Q: every discovered rule is an instance of a Cbar
  //! schema, up to equivalence of right-hand sides.
  Report verify_completion(std::size_t max_new_rules = 50,
                           std::size_t max_lhs_len   = 6);

  //! Φ vanishes on random interchange squares and on random p∘p⁻¹.
  Report verify_homotopy(std::size_t   squares = 500,
                         std::size_t   paths   = 500,
                         std::uint64_t seed    = 7);

  //! classify against the h-count, σ against exponent sums, and the
  //! stabilizer grid.
  Report verify_structure(std::size_t classify_len = 5,
                          std::size_t sigma_len    = 5,
                          int         grid         = 5);

  //! Commutator witnesses for reduced words up to commutator_len, Φ-to-X
  //! witnesses at phi_len, basepoint annihilation of 1−a and the X
  //! generators up to x_len, and 1−b^k surviving for k up to max_k.
  Report verify_obstruction(std::size_t commutator_len = 5,
                            std::size_t phi_len        = 3,
                            std::size_t x_len          = 6,
                            int         max_k          = 10);

  //! M4 and N4: equal normal forms up to nf_len, and equal distances on
  //! the ball of the given radius around ε and the ball of radius
  //! h_radius around h.
  Report verify_isometry(std::size_t radius   = 4,
                         std::size_t h_radius = 3,
                         std::size_t nf_len   = 6);

}  // namespace rwlab
