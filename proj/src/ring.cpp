#include "rwlab/ring.hpp"

#include <algorithm>
#include <vector>

#include "rwlab/error.hpp"
#include "rwlab/rewrite.hpp"

namespace rwlab {

  RingElement::RingElement(Ambient ambient) : ambient_(std::move(ambient)) {
    if (!ambient_) {
      throw Error("a ring element needs an ambient presentation");
    }
  }

  Integer RingElement::coefficient(Word const& w) const {
    auto it = terms_.find(normalize(w, *ambient_));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void RingElement::add_normal_form(Word const& nf, Integer const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(nf, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  RingElement& RingElement::add_word(Word const& w, Integer const& c) {
    std::size_t const n = ambient_->alphabet().size();
    for (Letter x : w) {
      if (x >= n) {
        throw Error("word is not over the alphabet of the ring");
      }
    }
    add_normal_form(normalize(w, *ambient_), c);
    return *this;
  }

  namespace {
    void check_ambient(RingElement const& x, RingElement const& y) {
      if (!same_ambient(x.ambient(), y.ambient())) {
        throw Error("ring elements over different presentations");
      }
    }
  }  // namespace

  RingElement& RingElement::operator+=(RingElement const& that) {
    check_ambient(*this, that);
    for (auto const& [w, c] : that.terms_) {
      add_normal_form(w, c);
    }
    return *this;
  }

  RingElement& RingElement::operator-=(RingElement const& that) {
    check_ambient(*this, that);
    for (auto const& [w, c] : that.terms_) {
      add_normal_form(w, -c);
    }
    return *this;
  }

  bool RingElement::operator==(RingElement const& that) const {
    return same_ambient(ambient_, that.ambient_) && terms_ == that.terms_;
  }

  bool same_ambient(Ambient const& a, Ambient const& b) {
    return a == b || (a && b && *a == *b);
  }

  RingElement from_word(Word const& w, Ambient const& ambient) {
    return RingElement(ambient).add_word(w);
  }

  RingElement ring_one(Ambient const& ambient) {
    return from_word(Word(), ambient);
  }

  RingElement add(RingElement const& x, RingElement const& y) {
    RingElement result = x;
    return result += y;
  }

  RingElement subtract(RingElement const& x, RingElement const& y) {
    RingElement result = x;
    return result -= y;
  }

  RingElement negate(RingElement const& x) {
    return scale(-1, x);
  }

  RingElement scale(Integer const& n, RingElement const& x) {
    RingElement result(x.ambient());
    if (n == 0) {
      return result;
    }
    for (auto const& [w, c] : x.terms()) {
      result.add_word(w, n * c);
    }
    return result;
  }

  RingElement right_mul(RingElement const& x, Word const& w) {
    RingElement result(x.ambient());
    for (auto const& [u, c] : x.terms()) {
      result.add_word(u + w, c);
    }
    return result;
  }

  RingElement multiply(RingElement const& x, RingElement const& y) {
    check_ambient(x, y);
    RingElement result(x.ambient());
    for (auto const& [u, c] : x.terms()) {
      for (auto const& [v, d] : y.terms()) {
        result.add_word(u + v, c * d);
      }
    }
    return result;
  }

  std::string format_ring(RingElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    auto const& p = *x.ambient();
    std::vector<std::pair<Word const, Integer> const*> terms;
    for (auto const& t : x.terms()) {
      terms.push_back(&t);
    }
    ShortlexLess const less{&p.effective_ordering()};
    std::sort(terms.begin(), terms.end(), [&less](auto const* s, auto const* t) {
      return less(t->first, s->first);
    });
    std::string result;
    for (auto const* t : terms) {
      if (!result.empty()) {
        result += ' ';
      }
      result += t->second < 0 ? "− " : "+ ";
      Integer const magnitude = abs(t->second);
      if (magnitude != 1) {
        result += magnitude.str() + "*";
      }
      result += p.alphabet().format(t->first);
    }
    return result;
  }

}  // namespace rwlab
