#pragma once

// A real algebraic number, either exactly rational or represented as the
// unique root of a squarefree integer polynomial inside an open isolating
// interval with rational endpoints.  All predicates (comparison, sign, floor)
// are exact: interval refinement is used for speed, with gcd/Sturm
// certificates deciding the would-be-equal cases, so no answer ever depends
// on a precision budget.
//
// Values are immutable.  Methods that refine internally do so on local
// copies, so const objects are safe to share across threads.

#include "drg/interval.hpp"
#include "drg/polynomial.hpp"
#include "drg/rational.hpp"

#include <memory>
#include <string>

namespace drg {

class AlgebraicNumber {
 public:
  AlgebraicNumber() : rational_(true), value_(0) {}
  /*implicit*/ AlgebraicNumber(Rat value) : rational_(true), value_(std::move(value)) {}
  /*implicit*/ AlgebraicNumber(const Int& value) : rational_(true), value_(value) {}

  // Root of `poly` in (lo, hi).  Requirements: poly squarefree with no
  // rational roots, poly(lo) and poly(hi) nonzero with opposite signs,
  // exactly one root inside.  (isolate_real_roots produces exactly this.)
  static AlgebraicNumber make_root(IntPoly poly, Rat lo, Rat hi);

  static AlgebraicNumber from_isolated(const IsolatedRoot& r);

  bool is_rational() const { return rational_; }
  const Rat& rational_value() const;  // requires is_rational()

  // Current enclosure; a point interval when rational.
  RatInterval enclosure() const;
  const IntPoly& minimal_poly() const;  // requires !is_rational()

  // Enclosure refined until its width is at most `width` (returns a copy of
  // the interval; the object itself is unchanged).
  RatInterval enclosure_refined(const Rat& width) const;

  // Tighten the stored interval in place (used once at construction sites to
  // make rendered output pleasant; not required for correctness).
  void tighten(const Rat& width);

  // One bisection step on a caller-held enclosure copy (obtained from
  // enclosure()); no-op for rational values.  The object is unchanged.
  void refine_once(Rat& lo, Rat& hi) const;

  // exact three-way comparisons
  int compare(const AlgebraicNumber& other) const;
  int compare(const Rat& r) const;
  bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }
  bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }

  Int floor() const;  // exact

  // exact sign of p(theta) for integer polynomial p
  int sign_at(const IntPoly& p) const;

  // y = shift + scale / (x + offset), exact on algebraic numbers.
  // Requires scale != 0 and x != -offset (caller must have excluded the pole).
  AlgebraicNumber mobius(const Rat& shift, const Rat& scale, const Rat& offset) const;

  // "5", "-4/3", or "alg(x^2+x-1, (1/2,3/4))"
  std::string to_string() const;

 private:
  bool rational_;
  Rat value_;                              // when rational_
  std::shared_ptr<const IntPoly> poly_;    // when !rational_
  Rat lo_, hi_;                            // isolating interval, open

  void refine_step(Rat& lo, Rat& hi) const;  // one sign bisection on copies
};

}  // namespace drg
