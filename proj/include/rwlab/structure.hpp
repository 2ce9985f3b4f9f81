#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace rwlab {

  //! The three H-classes of the case-study monoid, ordered as two-sided
  //! ideals: units < Hh < zero.
  enum class HClass { units = 0, hh = 1, zero = 2 };

  //! "Units", "Hh" or "Zero".
  std::string format_hclass(HClass c);

  //! By the number of h in the normal form: none is a unit, one is in the
  //! class of h, two is the zero.  A normal form containing a letter z is
  //! the zero as well.  Throws Error if the presentation has no letter h.
  HClass classify(Word const& w, Presentation const& p);

  //! The normal form of h·w under Qbar; words over a a' b b' with equal
  //! keys act identically on the class of h.
  Word sigma_key(Word const& w);

  bool sigma_equal(Word const& w1, Word const& w2);

  //! Least distances from center along right multiplication by single
  //! letters, up to radius.  Vertices are normal forms.
  struct Ball {
    Word                        center;
    std::size_t                 radius;
    std::map<Word, std::size_t> distances;
    //! True if every element reachable from center is in the ball, so
    //! anything missing is at infinite distance.
    bool exhausted = false;
  };

  Ball cayley_ball(Presentation const& p, Word const& center, std::size_t radius);

  //! `<distance>\t<normal form>` lines by distance, then shortlex.
  std::string format_ball(Ball const& b, Presentation const& p);

  //! A directed distance: a value, infinite (provably unreachable), or
  //! neither (not reached within the search radius).
  struct Distance {
    std::optional<std::size_t> value;
    bool                       infinite = false;
  };

  std::string format_distance(Distance const& d);

  Distance d_A(Presentation const& p,
               Word const&         x,
               Word const&         y,
               std::size_t         radius);

  struct IsometryReport {
    bool                     pass = true;
    std::size_t              vertices = 0;
    std::size_t              pairs_checked = 0;
    std::vector<std::string> violations;
  };

  //! Compares the balls of radius r about \p center in both presentations
  //! (matched by their printed normal forms) and, for every ordered pair
  //! of vertices, the distances found by searching radius r from the
  //! first.  Differing vertex sets are reported as "vertex sets differ".
  IsometryReport isometry_check(Presentation const& p1,
                                Presentation const& p2,
                                std::size_t         radius,
                                std::string const&  center = "ε");

  //! For every group letter x and |j|, |k| <= bound, checks that
  //! h b^j a^k x normalizes under Qbar to h b^{j'} a^{k'} with j', k' the
  //! exponent sums.  Returns the failing words, printed.
  std::vector<std::string> stabilizer_grid_check(int bound);

}  // namespace rwlab
