#pragma once

#include <map>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "presentation.hpp"
#include "word.hpp"

namespace rwlab {

  using Integer = boost::multiprecision::cpp_int;

  //! The complete presentation whose normal forms index a monoid ring.
  using Ambient = std::shared_ptr<Presentation const>;

  //! A finitely supported integer combination of normal forms of the
  //! ambient presentation, that is, an element of its monoid ring.  No
  //! zero coefficient is stored.
  class RingElement {
   public:
    //! Zero.
    explicit RingElement(Ambient ambient);

    Ambient const& ambient() const noexcept {
      return ambient_;
    }

    std::map<Word, Integer> const& terms() const noexcept {
      return terms_;
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    //! The coefficient of \p w, which is normalized first.
    Integer coefficient(Word const& w) const;

    //! Adds c times the normal form of \p w.
    RingElement& add_word(Word const& w, Integer const& c = 1);

    RingElement& operator+=(RingElement const& that);
    RingElement& operator-=(RingElement const& that);

    //! Equal terms over equal ambients.
    bool operator==(RingElement const& that) const;

   private:
    void add_normal_form(Word const& nf, Integer const& c);

    Ambient                 ambient_;
    std::map<Word, Integer> terms_;
  };

  //! True if the two ambients are the same object or equal presentations.
  bool same_ambient(Ambient const& a, Ambient const& b);

  //! 1 times the normal form of \p w.
  RingElement from_word(Word const& w, Ambient const& ambient);

  //! The identity 1·ε.
  RingElement ring_one(Ambient const& ambient);

  //! Throw Error if the ambients differ.
  RingElement add(RingElement const& x, RingElement const& y);
  RingElement subtract(RingElement const& x, RingElement const& y);
  RingElement negate(RingElement const& x);
  RingElement scale(Integer const& n, RingElement const& x);

  //! Every term multiplied on the right by \p w and renormalized.
  RingElement right_mul(RingElement const& x, Word const& w);

  //! The ring product x·y.
  RingElement multiply(RingElement const& x, RingElement const& y);

  inline RingElement operator+(RingElement const& x, RingElement const& y) {
    return add(x, y);
  }
  inline RingElement operator-(RingElement const& x, RingElement const& y) {
    return subtract(x, y);
  }
  inline RingElement operator-(RingElement const& x) {
    return negate(x);
  }
  inline RingElement operator*(RingElement const& x, RingElement const& y) {
    return multiply(x, y);
  }
  inline RingElement operator*(RingElement const& x, Word const& w) {
    return right_mul(x, w);
  }

  //! Terms from the shortlex-greatest down, each preceded by `+ ` or `− `;
  //! a coefficient other than ±1 is written `n*`; `0` for zero.  For
  //! example `+ a b − b a` or `+ 2*a − ε`.
  std::string format_ring(RingElement const& x);

}  // namespace rwlab
