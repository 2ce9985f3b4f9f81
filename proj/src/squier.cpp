#include "rwlab/squier.hpp"

#include <algorithm>
#include <sstream>

#include "rwlab/error.hpp"

namespace rwlab {

  Word Edge::source() const {
    return left + (sign == Sign::plus ? rule->lhs : rule->rhs) + right;
  }

  Word Edge::target() const {
    return left + (sign == Sign::plus ? rule->rhs : rule->lhs) + right;
  }

  bool Edge::operator==(Edge const& that) const {
    return left == that.left && sign == that.sign && right == that.right
           && (rule == that.rule || (rule && that.rule && *rule == *that.rule));
  }

  std::pair<Word, Word> edge_endpoints(Edge const& e) {
    return {e.source(), e.target()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  Path::Path(Word start) : start_(start), end_(std::move(start)) {}

  Path::Path(Word start, std::vector<Edge> edges)
      : start_(std::move(start)), edges_(std::move(edges)) {
    end_ = start_;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!edges_[i].rule) {
        throw Error("edge " + std::to_string(i) + " has no rule");
      }
      if (edges_[i].source() != end_) {
        throw Error("edge " + std::to_string(i)
                    + " does not start where the path so far ends");
      }
      end_ = edges_[i].target();
    }
  }

  Path Path::unchecked(Word start, Word end, std::vector<Edge> edges) {
    Path p;
    p.start_ = std::move(start);
    p.end_   = std::move(end);
    p.edges_ = std::move(edges);
    return p;
  }

  bool Path::is_positive() const noexcept {
    for (auto const& e : edges_) {
      if (e.sign != Sign::plus) {
        return false;
      }
    }
    return true;
  }

  Path single(Edge e) {
    Word s = e.source();
    Word t = e.target();
    return Path::unchecked(std::move(s), std::move(t), {std::move(e)});
  }

  Path compose(Path const& p, Path const& q) {
    if (p.end() != q.start()) {
      throw Error("cannot compose paths: the first does not end where the "
                  "second starts");
    }
    std::vector<Edge> edges;
    edges.reserve(p.size() + q.size());
    edges.insert(edges.end(), p.edges().begin(), p.edges().end());
    edges.insert(edges.end(), q.edges().begin(), q.edges().end());
    return Path::unchecked(p.start(), q.end(), std::move(edges));
  }

  Path compose(std::vector<Path> const& paths) {
    if (paths.empty()) {
      throw Error("cannot compose an empty list of paths");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (i > 0 && paths[i - 1].end() != paths[i].start()) {
        throw Error("cannot compose paths: path " + std::to_string(i)
                    + " does not start where the previous one ends");
      }
      edges.insert(edges.end(), paths[i].edges().begin(), paths[i].edges().end());
    }
    return Path::unchecked(
        paths.front().start(), paths.back().end(), std::move(edges));
  }

  Path invert(Path const& p) {
    std::vector<Edge> edges;
    edges.reserve(p.size());
    for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) {
      edges.push_back(it->inverse());
    }
    return Path::unchecked(p.end(), p.start(), std::move(edges));
  }

  Path act(Word const& x, Path const& p, Word const& y) {
    std::vector<Edge> edges;
    edges.reserve(p.size());
    for (auto const& e : p.edges()) {
      edges.push_back(Edge{x + e.left, e.rule, e.sign, e.right + y});
    }
    return Path::unchecked(x + p.start() + y, x + p.end() + y, std::move(edges));
  }

  Path interchange_square(Edge const& e1, Edge const& e2) {
    auto const u1 = e1.source(), v1 = e1.target();
    auto const u2 = e2.source(), v2 = e2.target();
    Path const p1 = single(e1);
    Path const p2 = single(e2);
    return compose({act({}, p1, u2),
                    act(v1, p2, {}),
                    invert(act({}, p1, v2)),
                    invert(act(u1, p2, {}))});
  }

  namespace {
    // The rewritten factor of e as [begin, end) in its source word.
    std::pair<std::size_t, std::size_t> factor(Edge const& e) {
      auto const& side = e.sign == Sign::plus ? e.rule->lhs : e.rule->rhs;
      return {e.left.size(), e.left.size() + side.size()};
    }

    // Strips the context outside [begin, end) of e's source.
    Edge restrict(Edge const& e, std::size_t begin, std::size_t end) {
      return Edge{e.left.substr(begin),
                  e.rule,
                  e.sign,
                  e.right.substr(0, e.right.size() - (e.source().size() - end))};
    }
  }  // namespace

  Path interchange_square_at(Edge const& e1, Edge const& e2) {
    Word const w = e1.source();
    if (e2.source() != w) {
      throw Error("interchange square: the edges leave different words");
    }
    auto const* first  = &e1;
    auto const* second = &e2;
    if (factor(*second) < factor(*first)) {
      std::swap(first, second);
    }
    auto const [b1, f1] = factor(*first);
    auto const [b2, f2] = factor(*second);
    if (f1 > b2) {
      throw Error("interchange square: the rewritten factors overlap");
    }
    // w = x·u1·y·u2·z; the square is built on u1·(y·u2) and whiskered.
    Word const x = w.substr(0, b1);
    Word const z = w.substr(f2);
    Edge const a = restrict(*first, b1, f1);
    Edge       b = restrict(*second, b2, f2);
    b.left       = w.substr(f1, b2 - f1) + b.left;
    Path square  = interchange_square(a, b);
    square       = act(x, square, z);
    // The inverse square starts with the edge on the right factor.
    return first == &e1 ? square : invert(square);
  }

  Path lift_path(Path const&         p,
                 Presentation const& original,
                 Realization const&  realization) {
    std::vector<Edge> edges;
    edges.reserve(p.size());
    for (auto const& e : p.edges()) {
      bool const kept = std::any_of(
          original.rules().begin(), original.rules().end(),
          [&](RulePtr const& r) { return r == e.rule; });
      if (kept) {
        edges.push_back(e);
        continue;
      }
      auto const orig = original.find_rule(e.rule->name);
      if (orig && orig->lhs == e.rule->lhs && orig->rhs == e.rule->rhs) {
        edges.push_back(e);
        continue;
      }
      auto q = realization(*e.rule);
      if (!q) {
        throw Error("no realization for rule " + e.rule->name);
      }
      if (q->start() != e.rule->lhs || q->end() != e.rule->rhs) {
        throw Error("the realization of rule " + e.rule->name
                    + " has the wrong endpoints");
      }
      // e.left · q^{±1} · e.right, without materializing the whiskered path.
      auto const& qe = q->edges();
      if (e.sign == Sign::plus) {
        for (auto const& f : qe) {
          edges.push_back(Edge{e.left + f.left, f.rule, f.sign, f.right + e.right});
        }
      } else {
        for (auto it = qe.rbegin(); it != qe.rend(); ++it) {
          edges.push_back(
              Edge{e.left + it->left, it->rule, -it->sign, it->right + e.right});
        }
      }
    }
    return Path::unchecked(p.start(), p.end(), std::move(edges));
  }

  Path path_from_reduction(Reduction const& r) {
    std::vector<Edge> edges;
    edges.reserve(r.steps.size());
    Word const* current = &r.start;
    for (auto const& s : r.steps) {
      std::size_t const n = s.rule->lhs.size();
      edges.push_back(Edge{current->substr(0, s.position),
                           s.rule,
                           Sign::plus,
                           current->substr(s.position + n)});
      current = &s.result;
    }
    return Path::unchecked(r.start, r.result, std::move(edges));
  }

  Path circuit_path(CriticalCircuit const& c) {
    auto const& k  = c.peak;
    auto const  e1 = single(Edge{k.source.substr(0, k.position1),
                                k.rule1,
                                Sign::plus,
                                k.source.substr(k.position1 + k.rule1->lhs.size())});
    auto const  e2 = single(Edge{k.source.substr(0, k.position2),
                                k.rule2,
                                Sign::plus,
                                k.source.substr(k.position2 + k.rule2->lhs.size())});
    return compose({e1,
                    path_from_reduction(c.left),
                    invert(path_from_reduction(c.right)),
                    invert(e2)});
  }

  std::vector<Edge> edges_at(Word const& w, Presentation const& p) {
    std::vector<Edge> result;
    for (Sign sign : both_signs) {
      for (auto const& r : p.rules()) {
        Word const& side = sign == Sign::plus ? r->lhs : r->rhs;
        for (std::size_t i = 0; i + side.size() <= w.size(); ++i) {
          if (w.compare(i, side.size(), side) == 0) {
            result.push_back(
                Edge{w.substr(0, i), r, sign, w.substr(i + side.size())});
          }
        }
      }
    }
    return result;
  }

  std::string format_path(Path const& p, Alphabet const& alphabet) {
    std::ostringstream out;
    out << alphabet.format(p.start());
    Word current = p.start();
    for (auto const& e : p.edges()) {
      current = e.target();
      out << " --(" << e.rule->name << ',' << format_sign(e.sign) << ")@"
          << e.left.size() << "--> " << alphabet.format(current);
    }
    return out.str();
  }

}  // namespace rwlab
