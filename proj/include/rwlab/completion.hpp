#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "presentation.hpp"
#include "rewrite.hpp"
#include "word.hpp"

namespace rwlab {

  enum class PeakKind { inclusion, overlap };

  //! Two rule applications to one word whose redexes share a letter.
  //!
  //! - inclusion: lhs2 = gamma1 lhs1 gamma2; the source is lhs2.
  //! - overlap:   lhs1 gamma1 = gamma2 lhs2 with 0 < |gamma2| < |lhs1|
  //!   and gamma1 non-empty; the source is lhs1 gamma1.
  struct CriticalPeak {
    PeakKind kind;
    RulePtr  rule1;
    RulePtr  rule2;
    Word     gamma1;
    Word     gamma2;
    Word     source;
    //! Offsets of the two redexes in source.
    std::size_t position1;
    std::size_t position2;
    //! The results of applying rule1, respectively rule2, to source.
    Word result1;
    Word result2;
  };

  //! A resolved peak: both results reduce to the same irreducible word.
  struct CriticalCircuit {
    CriticalPeak peak;
    Reduction    left;
    Reduction    right;
  };

  //! A peak whose results have distinct normal forms u and v.
  struct UnresolvedPeak {
    CriticalPeak peak;
    Word         u;
    Word         v;
  };

  using PeakResolution = std::variant<CriticalCircuit, UnresolvedPeak>;

  //! The plain rules followed by the instances of every schema with a
  //! variable of length at most \p schema_var_bound.  An instance with the
  //! same sides as an earlier rule is skipped.
  std::vector<RulePtr> rule_instances(Presentation const& p,
                                      std::size_t         schema_var_bound);

  //! All inclusion and overlap peaks among rule_instances(p, bound), each
  //! unordered pair once, sorted by source in shortlex order.
  std::vector<CriticalPeak> critical_peaks(Presentation const& p,
                                           std::size_t schema_var_bound);

  //! Peaks between the given rule instances.
  std::vector<CriticalPeak> critical_peaks(std::vector<RulePtr> const& rules,
                                           OrderingSpec const&         order);

  PeakResolution resolve_peak(CriticalPeak const&  k,
                              Presentation const&  p,
                              NormalizeOptions     opts = {});

  //! `<src> [<rule1>,<rule2>]`.
  std::string format_peak(CriticalPeak const& k, Alphabet const& alphabet);

  struct ConfluenceReport {
    std::vector<PeakResolution> peaks;
    bool                        confluent = true;

    std::size_t unresolved_count() const;
  };

  //! Resolves every critical peak at the given schema bound.
  ConfluenceReport is_confluent_bounded(Presentation const& p,
                                        std::size_t schema_var_bound = 3,
                                        NormalizeOptions opts = {});

  //! One line per peak:
  //! `peak <src> [<rule1>,<rule2>] -> resolved|UNRESOLVED(<u>,<v>)`.
  std::string format_confluence_report(ConfluenceReport const& r,
                                       Alphabet const&         alphabet);

  struct KnuthBendixOptions {
    std::size_t max_new_rules    = 50;
    std::size_t max_lhs_len      = 6;
    std::size_t schema_var_bound = 3;
    std::size_t max_rounds       = 32;
  };

  enum class CompletionStatus { completed, bounded_out };

  struct KnuthBendixReport {
    CompletionStatus status;
    //! Every rule added, as it was when added (later interreduction may
    //! rewrite or drop it).
    std::vector<Rule> discovered;
    std::size_t       rounds = 0;
    //! Why completion stopped early; empty when completed.
    std::string reason;
  };

  struct KnuthBendixResult {
    Presentation      presentation;
    KnuthBendixReport report;
  };

  //! Round-based completion.  Each round collects the unresolved peaks,
  //! then orients each pair (in shortlex order of the sources) into a new
  //! rule `N<k>` and interreduces.  Schemas are kept as they are.  Throws
  //! Error if \p p has no ordering or the ordering fails to orient it.
  KnuthBendixResult knuth_bendix(Presentation const& p,
                                 KnuthBendixOptions  opts = {});

  std::string format_knuth_bendix_report(KnuthBendixReport const& r,
                                         Alphabet const&          alphabet);

  //! normalize(u) == normalize(v).
  bool word_problem_equal(Word const&         u,
                          Word const&         v,
                          Presentation const& p_complete);

  //! Breadth-first search from u along rule applications in both
  //! directions, never visiting words longer than \p max_len.  Schemas take
  //! part through their instances that fit in max_len.
  bool bfs_equivalence_oracle(Word const&         u,
                              Word const&         v,
                              Presentation const& p,
                              std::size_t         max_len);

  //! The same relation as bfs_equivalence_oracle, precomputed for every
  //! word of length at most max_len at once.
  class EquivalenceOracle {
   public:
    EquivalenceOracle(Presentation const& p, std::size_t max_len);

    //! Throws Error if a word is longer than max_len.
    bool equivalent(Word const& u, Word const& v) const;

    //! Index of the class of \p w (stable for one oracle).
    std::size_t component(Word const& w) const;

    std::size_t max_len() const noexcept {
      return max_len_;
    }

   private:
    std::size_t index(Word const& w) const;

    std::size_t              alphabet_size_;
    std::size_t              max_len_;
    std::vector<std::size_t> level_start_;
    std::vector<std::uint32_t> root_;
  };

}  // namespace rwlab
