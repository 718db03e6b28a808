#include "drg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace drg {

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * x + Rat(coeff[i]);
  return acc;
}

RatInterval IntPoly::eval(const RatInterval& x) const {
  RatInterval acc{Rat(0)};
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * x + RatInterval(Rat(coeff[i]));
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeff.size() <= 1) return IntPoly{};
  std::vector<Int> d(coeff.size() - 1);
  for (std::size_t i = 1; i < coeff.size(); ++i) d[i - 1] = coeff[i] * Int(i);
  return IntPoly(std::move(d));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : coeff) g = gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> out(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) out[i] = coeff[i] / g;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::deflate(const Int& r) const {
  // synthetic division by (x - r)
  if (is_zero()) throw std::invalid_argument("deflate of zero polynomial");
  std::vector<Int> q(coeff.size() - 1);
  Int carry = 0;
  for (std::size_t i = coeff.size(); i-- > 1;) {
    carry = carry * r + coeff[i];
    q[i - 1] = carry;
  }
  Int rem = carry * r + coeff[0];
  if (rem != 0) throw std::invalid_argument("deflate: not a root");
  return IntPoly(std::move(q));
}

RatPoly::RatPoly(const IntPoly& p) {
  coeff.reserve(p.coeff.size());
  for (const auto& c : p.coeff) coeff.emplace_back(c);
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeff.size() <= 1) return RatPoly{};
  std::vector<Rat> d(coeff.size() - 1);
  for (std::size_t i = 1; i < coeff.size(); ++i) d[i - 1] = coeff[i] * Rat(Int(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  Rat lead = leading();
  std::vector<Rat> out(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) out[i] = coeff[i] / lead;
  return RatPoly(std::move(out));
}

IntPoly RatPoly::to_primitive_int() const {
  if (is_zero()) return {};
  Int l = 1;
  for (const auto& c : coeff) l = lcm(l, denominator(c));
  std::vector<Int> scaled(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    Rat v = coeff[i] * Rat(l);
    scaled[i] = numerator(v);
  }
  return IntPoly(std::move(scaled)).primitive();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> out(std::max(a.coeff.size(), b.coeff.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) out[i] += a.coeff[i];
  for (std::size_t i = 0; i < b.coeff.size(); ++i) out[i] += b.coeff[i];
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> out(std::max(a.coeff.size(), b.coeff.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) out[i] += a.coeff[i];
  for (std::size_t i = 0; i < b.coeff.size(); ++i) out[i] -= b.coeff[i];
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeff.size() + b.coeff.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    for (std::size_t j = 0; j < b.coeff.size(); ++j) out[i + j] += a.coeff[i] * b.coeff[j];
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  std::vector<Rat> out(a.coeff.size());
  for (std::size_t i = 0; i < a.coeff.size(); ++i) out[i] = s * a.coeff[i];
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  RatPoly rem = a;
  if (rem.degree() < b.degree()) return {RatPoly{}, rem};
  std::vector<Rat> q(rem.degree() - b.degree() + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rat f = rem.leading() / b.leading();
    q[shift] = f;
    for (std::size_t i = 0; i < b.coeff.size(); ++i)
      rem.coeff[i + shift] -= f * b.coeff[i];
    rem.trim();
  }
  return {RatPoly(std::move(q)), rem};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decompose of zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;

  // Yun: g = gcd(f,f'), c1 = f/g, d1 = f'/g - c1'
  RatPoly F(f);
  RatPoly g = gcd(F, F.derivative());
  RatPoly c = divmod(F, g).first;
  RatPoly d = divmod(F.derivative(), g).first - c.derivative();
  int mult = 1;
  while (c.degree() > 0) {
    RatPoly p = gcd(c, d);
    if (p.degree() > 0) {
      IntPoly factor = p.to_primitive_int();
      out.push_back({factor, mult});
    }
    RatPoly c_next = divmod(c, p).first;
    d = divmod(d, p).first - c_next.derivative();
    c = std::move(c_next);
    ++mult;
  }
  return out;
}

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 1) return true;
  RatPoly F(f);
  return gcd(F, F.derivative()).degree() == 0;
}

SturmChain::SturmChain(const IntPoly& p) {
  chain_.push_back(p.primitive());
  IntPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.primitive());
  // negated remainder sequence, normalized to primitive integer polynomials
  // by positive scaling only (positive scaling preserves sign variations)
  for (;;) {
    const IntPoly& s0 = chain_[chain_.size() - 2];
    const IntPoly& s1 = chain_[chain_.size() - 1];
    RatPoly rem = divmod(RatPoly(s0), RatPoly(s1)).second;
    if (rem.is_zero()) break;
    // we need a positive multiple of -rem; to_primitive_int returns a
    // positive multiple of rem or -rem depending on rem's leading sign
    IntPoly next = rem.to_primitive_int();
    if (rem.leading() > 0)
      for (auto& cf : next.coeff) cf = -cf;
    chain_.push_back(std::move(next));
    if (chain_.back().degree() == 0) break;
  }
}

int SturmChain::variations(const Rat& x) const {
  int count = 0, prev = 0;
  for (const auto& p : chain_) {
    Rat v = p.eval(x);
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count_roots(const Rat& lo, const Rat& hi) const {
  if (lo >= hi) throw std::invalid_argument("count_roots: empty interval");
  return variations(lo) - variations(hi);
}

Int root_bound(const IntPoly& p) {
  if (p.is_zero() || p.degree() == 0) return 1;
  Rat mx = 0;
  Rat lead = Rat(abs(p.leading()));
  for (std::size_t i = 0; i + 1 < p.coeff.size(); ++i) {
    Rat r = Rat(abs(p.coeff[i])) / lead;
    if (r > mx) mx = r;
  }
  return ceil_rat(mx) + 1;
}

namespace {

// integers t with lo < t <= hi
std::vector<Int> integers_in(const Rat& lo, const Rat& hi) {
  std::vector<Int> out;
  Int t = floor_rat(lo) + 1;
  while (Rat(t) <= hi) {
    out.push_back(t);
    ++t;
  }
  return out;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p_in) {
  if (p_in.is_zero()) throw std::invalid_argument("isolate_real_roots of zero polynomial");
  IntPoly q = p_in.primitive();

  std::vector<Rat> rational_roots;

  // Each pass isolates with a Sturm chain; discovering a rational root
  // deflates it out and restarts, so the final pass certifies that the
  // residual polynomial is free of rational roots.
  for (bool restart = true; restart;) {
    restart = false;
    if (q.degree() <= 0) break;

    SturmChain sturm(q);
    Int B = root_bound(q);
    Rat lo0 = Rat(-B), hi0 = Rat(B);

    std::vector<std::pair<Rat, Rat>> stack{{lo0, hi0}};
    std::vector<IsolatedRoot> found;

    auto deflate_at = [&](const Rat& r) {
      // q is kept rational-root-free only for integer roots; r is always an
      // integer here (monic q => rational roots are integers; midpoints that
      // evaluate to zero must therefore be integers)
      rational_roots.push_back(r);
      if (is_integer(r)) {
        q = q.deflate(numerator(r));
      } else {
        // non-monic caller escape hatch: divide over Q and renormalize
        std::vector<Rat> lin{-r, Rat(1)};
        q = divmod(RatPoly(q), RatPoly(std::move(lin))).first.to_primitive_int();
      }
      restart = true;
    };

    while (!stack.empty() && !restart) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int count = sturm.count_roots(lo, hi);
      if (count == 0) continue;
      if (count == 1) {
        // refine until certified irrational-in-interval or integer root found
        Rat a = lo, b = hi;
        for (;;) {
          std::vector<Int> cands = integers_in(a, b);
          if (cands.empty()) break;
          bool deflated = false;
          for (const auto& t : cands) {
            if (q.eval(t) == 0) {
              deflate_at(Rat(t));
              deflated = true;
              break;
            }
          }
          if (deflated) break;
          Rat m = (a + b) / 2;
          // for monic q, m can only be a root if it is an integer, and the
          // candidates above already tested those; keep a guard regardless
          if (q.eval(m) == 0) {
            deflate_at(m);
            break;
          }
          if (sturm.count_roots(a, m) == 1)
            b = m;
          else
            a = m;
        }
        if (restart) break;
        // root strictly inside (a, b), endpoints nonzero: snapshot it
        IsolatedRoot r;
        r.rational = false;
        r.poly = q;
        r.lo = a;
        r.hi = b;
        found.push_back(std::move(r));
        continue;
      }
      Rat m = (lo + hi) / 2;
      if (q.eval(m) == 0) {
        deflate_at(m);
        break;
      }
      stack.push_back({lo, m});
      stack.push_back({m, hi});
    }

    if (!restart) {
      // Push each surviving interval off every rational root found in earlier
      // passes (the enclosed root is irrational, so sign bisection always
      // separates them); afterwards representative points order everything.
      for (auto& f : found) {
        for (const auto& r : rational_roots) {
          while (f.lo < r && r < f.hi) {
            Rat m = (f.lo + f.hi) / 2;
            // q has no rational roots, and m is rational, so q(m) != 0
            if ((q.eval(f.lo) > 0) == (q.eval(m) > 0))
              f.lo = m;
            else
              f.hi = m;
          }
        }
      }
      std::vector<IsolatedRoot> all;
      for (const auto& r : rational_roots) {
        IsolatedRoot ir;
        ir.rational = true;
        ir.value = r;
        all.push_back(std::move(ir));
      }
      for (auto& f : found) all.push_back(std::move(f));
      std::sort(all.begin(), all.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
        Rat xv = x.rational ? x.value : (x.lo + x.hi) / 2;
        Rat yv = y.rational ? y.value : (y.lo + y.hi) / 2;
        return xv < yv;
      });
      return all;
    }
  }

  // q fully deflated to a constant: only rational roots
  std::vector<IsolatedRoot> all;
  std::sort(rational_roots.begin(), rational_roots.end());
  for (const auto& r : rational_roots) {
    IsolatedRoot ir;
    ir.rational = true;
    ir.value = r;
    all.push_back(std::move(ir));
  }
  return all;
}

std::string poly_to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeff[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool first = s.empty();
    Int a = abs(c);
    if (first)
      s += (c < 0 ? "-" : "");
    else
      s += (c < 0 ? "-" : "+");
    if (i == 0) {
      s += a.str();
    } else {
      if (a != 1) s += a.str() + "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace drg
