#pragma once

// Exact univariate polynomial arithmetic over Z and Q: the machinery behind
// eigenvalue isolation.  Coefficients are stored in ascending order and kept
// normalized (no leading zeros; the zero polynomial has an empty vector).

#include "drg/interval.hpp"
#include "drg/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace drg {

struct RatPoly;

struct IntPoly {
  std::vector<Int> coeff;  // coeff[i] multiplies x^i

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c) : coeff(std::move(c)) { trim(); }

  void trim() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  }
  bool is_zero() const { return coeff.empty(); }
  // degree of the zero polynomial is reported as -1
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  const Int& leading() const { return coeff.back(); }
  bool is_monic() const { return !coeff.empty() && coeff.back() == 1; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  RatInterval eval(const RatInterval& x) const;  // exact interval extension

  IntPoly derivative() const;

  // content (gcd of coefficients, positive) and primitive part with
  // positive leading coefficient
  Int content() const;
  IntPoly primitive() const;

  // exact division by (x - r); throws unless r is a root
  IntPoly deflate(const Int& r) const;

  bool operator==(const IntPoly&) const = default;
};

struct RatPoly {
  std::vector<Rat> coeff;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> c) : coeff(std::move(c)) { trim(); }
  explicit RatPoly(const IntPoly& p);

  void trim() {
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  }
  bool is_zero() const { return coeff.empty(); }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  const Rat& leading() const { return coeff.back(); }

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;  // divide by leading coefficient

  // scale by the lcm of denominators / gcd of numerators -> primitive integer
  // polynomial with positive leading coefficient (sign is NOT preserved)
  IntPoly to_primitive_int() const;

  bool operator==(const RatPoly&) const = default;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rat& s, const RatPoly& a);

// Euclidean division: a = q*b + r with deg r < deg b.  b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// monic gcd over Q (Euclid); gcd(0,0) = 0
RatPoly gcd(const RatPoly& a, const RatPoly& b);

// Yun's squarefree decomposition: f = prod_i factor[i]^(mult[i]) with the
// factors squarefree, pairwise coprime, and mult strictly increasing.
// Requires f nonzero; constant f yields an empty list.
struct SquarefreeFactor {
  IntPoly factor;  // primitive, positive leading coefficient
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& f);

// true iff gcd(f, f') is constant
bool is_squarefree(const IntPoly& f);

// Sturm chain of a squarefree polynomial; counts real roots exactly.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);

  // number of sign variations of the chain at x
  int variations(const Rat& x) const;
  // number of roots in the half-open interval (lo, hi]
  int count_roots(const Rat& lo, const Rat& hi) const;

  const std::vector<IntPoly>& polys() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

// B with every real root of p strictly inside (-B, B); integral for
// convenience (Cauchy bound rounded up).
Int root_bound(const IntPoly& p);

// One isolated real root of a squarefree integer polynomial.
struct IsolatedRoot {
  bool rational;
  Rat value;    // when rational
  IntPoly poly; // when irrational: squarefree, free of rational roots
  Rat lo, hi;   // when irrational: p(lo), p(hi) nonzero with opposite signs,
                // exactly one root of poly in (lo, hi)
};

// All real roots of a squarefree p, in strictly increasing order.
// Requirement: every rational root of p is an integer (true for monic p,
// the only polynomials this artifact isolates).
std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p);

// Human-readable "x^2+x-1" form (descending powers).
std::string poly_to_string(const IntPoly& p);

}  // namespace drg
