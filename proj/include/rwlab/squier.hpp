#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "completion.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "sign.hpp"
#include "word.hpp"

namespace rwlab {

  //! An edge (left, rule, sign, right) of the derivation graph: it rewrites
  //! left·lhs·right to left·rhs·right when sign is plus, and the other way
  //! round when sign is minus.
  struct Edge {
    Word    left;
    RulePtr rule;
    Sign    sign;
    Word    right;

    Word source() const;
    Word target() const;

    Edge inverse() const {
      return Edge{left, rule, -sign, right};
    }

    bool operator==(Edge const& that) const;
  };

  //! (source, target) of \p e.
  std::pair<Word, Word> edge_endpoints(Edge const& e);

  //! A composable sequence of edges.  The start word is stored so that
  //! empty paths are well typed.
  class Path {
   public:
    //! The empty path at \p start.
    explicit Path(Word start);

    //! Throws Error unless the target of each edge is the source of the
    //! next, and the first source is \p start.
    Path(Word start, std::vector<Edge> edges);

    //! Caller guarantees that \p edges is composable from \p start to
    //! \p end.
    static Path unchecked(Word start, Word end, std::vector<Edge> edges);

    Word const& start() const noexcept {
      return start_;
    }
    Word const& end() const noexcept {
      return end_;
    }
    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    std::size_t size() const noexcept {
      return edges_.size();
    }
    bool empty() const noexcept {
      return edges_.empty();
    }
    bool is_closed() const noexcept {
      return start_ == end_;
    }
    bool is_positive() const noexcept;

    bool operator==(Path const&) const = default;

   private:
    Path() = default;

    Word              start_;
    Word              end_;
    std::vector<Edge> edges_;
  };

  //! The one-edge path.
  Path single(Edge e);

  //! p then q.  Throws Error if p does not end where q starts.
  Path compose(Path const& p, Path const& q);

  //! Composition of a non-empty list.
  Path compose(std::vector<Path> const& paths);

  Path invert(Path const& p);

  //! x·p·y: every edge gets x prepended to its left context and y
  //! appended to its right context.
  Path act(Word const& x, Path const& p, Word const& y);

  //! For e1 from u1 to v1 and e2 from u2 to v2, the closed path at u1·u2
  //!
  //!     (e1·u2) ∘ (v1·e2) ∘ (e1·v2)⁻¹ ∘ (u1·e2)⁻¹.
  Path interchange_square(Edge const& e1, Edge const& e2);

  //! As above for two edges leaving the same word; throws Error if the
  //! rewritten factors overlap or the sources differ.
  Path interchange_square_at(Edge const& e1, Edge const& e2);

  //! Returns the path realizing the positive edge (ε, rule, +1, ε), or
  //! nullopt if the rule has no realization.
  using Realization = std::function<std::optional<Path>(Rule const&)>;

  //! Replaces every edge whose rule is not a rule of \p original by the
  //! realization of its rule, acted on by the edge's contexts (and
  //! inverted for negative edges).  Throws Error on a missing realization
  //! or one with the wrong endpoints.
  Path lift_path(Path const&         p,
                 Presentation const& original,
                 Realization const&  realization);

  //! The positive path recorded by a reduction.
  Path path_from_reduction(Reduction const& r);

  //! The closed path at the source of the peak: the rule1 edge, the left
  //! reduction, the inverted right reduction and the inverted rule2 edge.
  Path circuit_path(CriticalCircuit const& c);

  //! Every edge leaving \p w along a plain rule of \p p: positive edges at
  //! occurrences of a lhs, then negative edges at occurrences of a rhs.
  std::vector<Edge> edges_at(Word const& w, Presentation const& p);

  //! `<word>` followed by ` --(<rule>,<sign>)@<|left|>--> <word>` per edge.
  std::string format_path(Path const& p, Alphabet const& alphabet);

}  // namespace rwlab
