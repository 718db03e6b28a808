#include "drg/algebraic.hpp"

#include <stdexcept>
#include <utility>

namespace drg {

AlgebraicNumber AlgebraicNumber::make_root(IntPoly poly, Rat lo, Rat hi) {
  AlgebraicNumber a;
  a.rational_ = false;
  a.value_ = 0;
  Rat at_lo = poly.eval(lo), at_hi = poly.eval(hi);
  if (lo >= hi || at_lo == 0 || at_hi == 0 || ((at_lo > 0) == (at_hi > 0)))
    throw std::invalid_argument("make_root: not a sign-isolating interval");
  a.poly_ = std::make_shared<const IntPoly>(std::move(poly));
  a.lo_ = std::move(lo);
  a.hi_ = std::move(hi);
  return a;
}

AlgebraicNumber AlgebraicNumber::from_isolated(const IsolatedRoot& r) {
  if (r.rational) return AlgebraicNumber(r.value);
  return make_root(r.poly, r.lo, r.hi);
}

const Rat& AlgebraicNumber::rational_value() const {
  if (!rational_) throw std::logic_error("rational_value on irrational number");
  return value_;
}

const IntPoly& AlgebraicNumber::minimal_poly() const {
  if (rational_) throw std::logic_error("minimal_poly on rational number");
  return *poly_;
}

RatInterval AlgebraicNumber::enclosure() const {
  if (rational_) return RatInterval(value_);
  return RatInterval(lo_, hi_);
}

void AlgebraicNumber::refine_step(Rat& lo, Rat& hi) const {
  Rat m = (lo + hi) / 2;
  // poly_ has no rational roots, so poly(m) != 0 for rational m
  if ((poly_->eval(lo) > 0) == (poly_->eval(m) > 0))
    lo = m;
  else
    hi = m;
}

RatInterval AlgebraicNumber::enclosure_refined(const Rat& width) const {
  if (rational_) return RatInterval(value_);
  Rat lo = lo_, hi = hi_;
  while (hi - lo > width) refine_step(lo, hi);
  return RatInterval(lo, hi);
}

void AlgebraicNumber::refine_once(Rat& lo, Rat& hi) const {
  if (rational_) return;
  refine_step(lo, hi);
}

void AlgebraicNumber::tighten(const Rat& width) {
  if (rational_) return;
  while (hi_ - lo_ > width) refine_step(lo_, hi_);
}

int AlgebraicNumber::compare(const Rat& r) const {
  if (rational_) return value_ < r ? -1 : (value_ > r ? 1 : 0);
  Rat lo = lo_, hi = hi_;
  // the value is irrational, so it never equals r and separation terminates
  for (;;) {
    if (hi <= r) return -1;
    if (lo >= r) return 1;
    refine_step(lo, hi);
  }
}

int AlgebraicNumber::compare(const AlgebraicNumber& other) const {
  if (other.rational_) return compare(other.value_);
  if (rational_) return -other.compare(value_);

  // Equality is decidable up front: this == other iff gcd(p, q) has a root in
  // the intersection of the isolating intervals (each interval holds exactly
  // one root of its own polynomial).
  Rat alo = lo_, ahi = hi_, blo = other.lo_, bhi = other.hi_;
  RatPoly g = gcd(RatPoly(*poly_), RatPoly(*other.poly_));
  if (g.degree() > 0) {
    Rat ilo = std::max(alo, blo), ihi = std::min(ahi, bhi);
    if (ilo < ihi) {
      IntPoly gi = g.to_primitive_int();
      if (SturmChain(gi).count_roots(ilo, ihi) > 0) return 0;
    }
    // A shared root may still sit in the overlap of FUTURE refinements only
    // if it is in the current overlap; count_roots==0 or empty overlap means
    // the two roots are distinct, so refinement below terminates.
  }
  for (;;) {
    if (ahi <= blo) return -1;
    if (bhi <= alo) return 1;
    refine_step(alo, ahi);
    other.refine_step(blo, bhi);
  }
}

Int AlgebraicNumber::floor() const {
  if (rational_) return floor_rat(value_);
  Rat lo = lo_, hi = hi_;
  // irrational value: some integer-free neighborhood exists, so this stops
  for (;;) {
    Int fl = floor_rat(lo), fh = floor_rat(hi);
    if (fl == fh) return fl;
    // endpoints are never roots; an integral endpoint is fine to test against
    if (Rat(fh) == hi && fl + 1 == fh) return fl;  // hi itself integral, value < hi
    refine_step(lo, hi);
  }
}

int AlgebraicNumber::sign_at(const IntPoly& p) const {
  if (rational_) {
    Rat v = p.eval(value_);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
  }
  // zero iff p shares this root: decide exactly, then interval-refine
  RatPoly g = gcd(RatPoly(p), RatPoly(*poly_));
  if (g.degree() > 0) {
    IntPoly gi = g.to_primitive_int();
    if (SturmChain(gi).count_roots(lo_, hi_) > 0) return 0;
  }
  Rat lo = lo_, hi = hi_;
  for (;;) {
    RatInterval img = p.eval(RatInterval(lo, hi));
    int s = img.certain_sign();
    if (s != 2) return s;
    refine_step(lo, hi);
  }
}

AlgebraicNumber AlgebraicNumber::mobius(const Rat& shift, const Rat& scale, const Rat& offset) const {
  if (scale == 0) throw std::invalid_argument("mobius: zero scale");
  if (rational_) {
    Rat d = value_ + offset;
    if (d == 0) throw std::domain_error("mobius: evaluation at the pole");
    return AlgebraicNumber(shift + scale / d);
  }

  // Refine until the pole -offset is strictly outside [lo, hi].  The root is
  // irrational and the pole rational, so sign bisection separates them; when
  // the midpoint would hit the pole, take a quarter point instead.
  Rat lo = lo_, hi = hi_;
  Rat pole = -offset;
  while (lo <= pole && pole <= hi) {
    Rat m = (lo + hi) / 2;
    if (m == pole) m = (lo + m) / 2;
    if ((poly_->eval(m) > 0) == (poly_->eval(lo) > 0))
      lo = m;
    else
      hi = m;
  }

  // transformed polynomial: if p(x) = sum p_i x^i has degree d, then
  //   q(y) = sum_i p_i * (b - c*(y-a))^i * (y-a)^(d-i),   with y = a + b/(x+c)
  // (derived by substituting x = -c + b/(y-a) and clearing (y-a)^d).
  // For squarefree p this q is squarefree and its rational roots correspond
  // to rational x, of which p has none.
  const IntPoly& p = *poly_;
  int d = p.degree();
  RatPoly q;  // zero
  RatPoly lin_ba{std::vector<Rat>{scale + offset * shift, -offset}};  // b - c*(y-a) = (b+ca) - c*y
  RatPoly lin_ya{std::vector<Rat>{-shift, Rat(1)}};                   // y - a
  // precompute powers
  std::vector<RatPoly> pow_ba(static_cast<std::size_t>(d) + 1), pow_ya(static_cast<std::size_t>(d) + 1);
  pow_ba[0] = RatPoly{std::vector<Rat>{Rat(1)}};
  pow_ya[0] = RatPoly{std::vector<Rat>{Rat(1)}};
  for (int i = 1; i <= d; ++i) {
    pow_ba[static_cast<std::size_t>(i)] = pow_ba[static_cast<std::size_t>(i - 1)] * lin_ba;
    pow_ya[static_cast<std::size_t>(i)] = pow_ya[static_cast<std::size_t>(i - 1)] * lin_ya;
  }
  for (int i = 0; i <= d; ++i) {
    Rat pi(p.coeff[static_cast<std::size_t>(i)]);
    if (pi == 0) continue;
    q = q + pi * (pow_ba[static_cast<std::size_t>(i)] * pow_ya[static_cast<std::size_t>(d - i)]);
  }
  IntPoly qi = q.to_primitive_int();

  // image interval: the map is monotone on (lo, hi) since the pole is outside
  Rat y1 = shift + scale / (lo + offset);
  Rat y2 = shift + scale / (hi + offset);
  Rat new_lo = std::min(y1, y2), new_hi = std::max(y1, y2);

  // ensure the image interval sign-isolates a root of qi; the image of the
  // root is strictly inside, and endpoints are images of non-roots, but qi
  // may momentarily see other roots inside wide intervals -> refine source
  SturmChain s(qi);
  while (s.count_roots(new_lo, new_hi) != 1 || qi.eval(new_lo) == 0 || qi.eval(new_hi) == 0 ||
         ((qi.eval(new_lo) > 0) == (qi.eval(new_hi) > 0))) {
    refine_step(lo, hi);
    y1 = shift + scale / (lo + offset);
    y2 = shift + scale / (hi + offset);
    new_lo = std::min(y1, y2);
    new_hi = std::max(y1, y2);
  }
  return make_root(std::move(qi), std::move(new_lo), std::move(new_hi));
}

std::string AlgebraicNumber::to_string() const {
  if (rational_) return to_canonical(value_);
  return "alg(" + poly_to_string(*poly_) + ", (" + to_canonical(lo_) + "," + to_canonical(hi_) + "))";
}

}  // namespace drg
