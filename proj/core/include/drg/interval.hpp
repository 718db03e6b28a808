#pragma once

// Closed intervals with exact rational endpoints.  Because the endpoints are
// exact there is no rounding direction to worry about: every operation below
// returns an interval that contains the image of the inputs, and repeated
// refinement of the inputs converges.

#include "drg/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace drg {

struct RatInterval {
  Rat lo, hi;  // invariant: lo <= hi

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat point) : lo(point), hi(point) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }

  // Sign if provable: -1 / +1 when the whole interval is on one side of 0,
  // 0 when the interval is exactly {0}, otherwise indeterminate (returns 2).
  int certain_sign() const {
    if (hi < 0) return -1;
    if (lo > 0) return 1;
    if (lo == 0 && hi == 0) return 0;
    return 2;
  }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RatInterval square(const RatInterval& a) {
  Rat l = abs_rat(a.lo), h = abs_rat(a.hi);
  Rat m = std::max(l, h);
  Rat lo = (a.lo <= 0 && a.hi >= 0) ? Rat(0) : std::min(l, h);
  return {lo * lo, m * m};
}

// Reciprocal; requires 0 strictly outside the interval.
inline RatInterval reciprocal(const RatInterval& a) {
  if (a.lo <= 0 && a.hi >= 0) throw std::domain_error("interval reciprocal through zero");
  return {Rat(1) / a.hi, Rat(1) / a.lo};
}

inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  return a * reciprocal(b);
}

inline RatInterval operator*(const Rat& s, const RatInterval& a) {
  if (s >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

inline RatInterval operator+(const Rat& s, const RatInterval& a) {
  return {s + a.lo, s + a.hi};
}

}  // namespace drg
