#include "drg/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace drg {

IntersectionMatrix build_intersection_matrix(const DerivedParameters& d) {
  IntersectionMatrix m;
  std::size_t D = d.diameter();
  m.diag = d.a;
  m.sub = d.array.c;
  m.super.resize(D);
  for (std::size_t i = 0; i < D; ++i) m.super[i] = d.array.b[i];
  return m;
}

IntPoly characteristic_polynomial(const IntersectionMatrix& m) {
  // chi_0 = 1, chi_1 = x - a_0,
  // chi_{j+1} = (x - a_j) chi_j - b_{j-1} c_j chi_{j-1}
  std::size_t order = m.order();
  RatPoly prev{std::vector<Rat>{Rat(1)}};
  RatPoly cur{std::vector<Rat>{Rat(-m.diag[0]), Rat(1)}};
  for (std::size_t j = 1; j < order; ++j) {
    RatPoly lin{std::vector<Rat>{Rat(-m.diag[j]), Rat(1)}};
    Rat offdiag = Rat(m.super[j - 1] * m.sub[j - 1]);
    RatPoly next = lin * cur - offdiag * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // coefficients are integers throughout; normalize the representation
  std::vector<Int> coeff(cur.coeff.size());
  for (std::size_t i = 0; i < cur.coeff.size(); ++i) {
    if (!is_integer(cur.coeff[i])) throw std::logic_error("char poly: non-integer coefficient");
    coeff[i] = numerator(cur.coeff[i]);
  }
  return IntPoly(std::move(coeff));
}

std::vector<Rat> standard_sequence(const DerivedParameters& d, const Rat& theta) {
  std::size_t D = d.diameter();
  std::vector<Rat> u(D + 1);
  u[0] = 1;
  Rat prev = 0;  // u_{-1}
  for (std::size_t i = 0; i < D; ++i) {
    Rat next = ((theta - Rat(d.a[i])) * u[i] - Rat(d.array.c_at(i)) * prev) / Rat(d.array.b[i]);
    prev = u[i];
    u[i + 1] = next;
  }
  return u;
}

std::vector<RatInterval> standard_sequence(const DerivedParameters& d, const RatInterval& theta) {
  std::size_t D = d.diameter();
  std::vector<RatInterval> u(D + 1);
  u[0] = RatInterval(Rat(1));
  RatInterval prev{Rat(0)};
  for (std::size_t i = 0; i < D; ++i) {
    RatInterval shifted = theta - RatInterval(Rat(d.a[i]));
    RatInterval next = shifted * u[i] - Rat(d.array.c_at(i)) * prev;
    next = Rat(1) / Rat(d.array.b[i]) * next;
    prev = u[i];
    u[i + 1] = next;
  }
  return u;
}

namespace {

// sum_i k_i u_i^2 over an enclosure of theta; always >= 1 since u_0 = 1
RatInterval weighted_square_sum(const DerivedParameters& d, const RatInterval& theta) {
  std::vector<RatInterval> u = standard_sequence(d, theta);
  RatInterval s{Rat(0)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rat ki = d.k_dist[i];
    s = s + ki * square(u[i]);
  }
  return s;
}

// u_i as polynomials in theta, reduced mod g: exact number-field arithmetic
std::vector<RatPoly> standard_sequence_mod(const DerivedParameters& d, const RatPoly& g) {
  std::size_t D = d.diameter();
  std::vector<RatPoly> u(D + 1);
  u[0] = RatPoly{std::vector<Rat>{Rat(1)}};
  RatPoly prev;  // zero
  for (std::size_t i = 0; i < D; ++i) {
    RatPoly lin{std::vector<Rat>{Rat(-d.a[i]), Rat(1)}};  // theta - a_i
    RatPoly next = lin * u[i] - Rat(d.array.c_at(i)) * prev;
    next = divmod(next, g).second;
    next = Rat(1) / Rat(d.array.b[i]) * next;
    prev = u[i];
    u[i + 1] = next;
  }
  return u;
}

RatPoly weighted_square_sum_mod(const DerivedParameters& d, const RatPoly& g) {
  std::vector<RatPoly> u = standard_sequence_mod(d, g);
  RatPoly s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    RatPoly sq = divmod(u[i] * u[i], g).second;
    s = s + d.k_dist[i] * sq;
  }
  return divmod(s, g).second;
}

Int integers_in_closed(const Rat& lo, const Rat& hi, Int& first) {
  first = ceil_rat(lo);
  Int last = floor_rat(hi);
  if (last < first) return 0;
  return last - first + 1;
}

}  // namespace

MultiplicityResult multiplicity(const DerivedParameters& d, const AlgebraicNumber& theta,
                                const SpectrumOptions& opt) {
  if (!d.k_dist_integral() || !is_integer(d.n))
    throw std::invalid_argument("multiplicity: non-integral distance-class sizes");
  Int n = numerator(d.n);

  if (theta.is_rational()) {
    const Rat& t = theta.rational_value();
    std::vector<Rat> u = standard_sequence(d, t);
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += d.k_dist[i] * u[i] * u[i];
    Rat m = Rat(n) / s;
    if (is_integer(m) && m >= 1) return {MultiplicityResult::Kind::Integer, numerator(m), {}};
    return {MultiplicityResult::Kind::NonIntegral, 0, to_canonical(m)};
  }

  // Irrational theta: refine the enclosure until the multiplicity interval
  // pins down at most one integer candidate, then certify that candidate
  // exactly in Q[x]/(g).
  RatInterval enc = theta.enclosure();
  Rat lo = enc.lo, hi = enc.hi;
  RatPoly g = RatPoly(theta.minimal_poly());
  for (int step = 0; step <= opt.precision_bits; ++step) {
    RatInterval s = weighted_square_sum(d, RatInterval(lo, hi));
    RatInterval m = RatInterval(Rat(n)) / s;
    Int candidate;
    Int count = integers_in_closed(m.lo, m.hi, candidate);
    if (count == 0) {
      return {MultiplicityResult::Kind::NonIntegral, 0,
              "enclosure [" + to_canonical(m.lo) + "," + to_canonical(m.hi) + "] excludes all integers"};
    }
    if (count == 1) {
      if (candidate < 1) {
        return {MultiplicityResult::Kind::NonIntegral, 0,
                "enclosure admits only non-positive candidate " + candidate.str()};
      }
      // certificate: candidate * S(theta) - n == 0 in Q[x]/(g)?
      RatPoly S = weighted_square_sum_mod(d, g);
      RatPoly R = Rat(candidate) * S - RatPoly{std::vector<Rat>{Rat(n)}};
      R = divmod(R, g).second;
      if (R.is_zero()) return {MultiplicityResult::Kind::Integer, candidate, {}};
      if (theta.sign_at(R.to_primitive_int()) == 0)
        return {MultiplicityResult::Kind::Integer, candidate, {}};
      return {MultiplicityResult::Kind::NonIntegral, 0,
              "certificate refutes the only integer candidate " + candidate.str()};
    }
    theta.refine_once(lo, hi);
  }
  return {MultiplicityResult::Kind::Inconclusive, 0,
          "multiplicity enclosure not resolved within " + std::to_string(opt.precision_bits) +
              " refinement steps"};
}

SpectrumOutcome compute_spectrum(const DerivedParameters& d, const SpectrumOptions& opt) {
  SpectrumOutcome out;
  if (!d.k_dist_integral() || !is_integer(d.n))
    throw std::invalid_argument("compute_spectrum: basic feasibility must hold first");

  IntPoly p = characteristic_polynomial(build_intersection_matrix(d));
  if (!is_squarefree(p)) {
    out.checks.push_back(make_check(
        "spectrum_squarefree", CheckStatus::Inconclusive,
        {{"char_poly", poly_to_string(p)}},
        "characteristic polynomial is not squarefree; eigenvalue structure degenerate"));
    return out;
  }

  std::vector<IsolatedRoot> roots = isolate_real_roots(p);
  if (roots.size() != d.diameter() + 1) {
    out.checks.push_back(make_check(
        "spectrum_roots", CheckStatus::Inconclusive,
        {{"real_roots", std::to_string(roots.size())},
         {"expected", std::to_string(d.diameter() + 1)}},
        "characteristic polynomial does not have D+1 real roots"));
    return out;
  }

  std::vector<AlgebraicNumber> eigs;
  eigs.reserve(roots.size());
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {  // descending
    AlgebraicNumber v = AlgebraicNumber::from_isolated(*it);
    // narrow for stable, pleasant rendering (2^-20); exactness is unaffected
    v.tighten(Rat(1, 1048576));
    eigs.push_back(std::move(v));
  }

  if (!(eigs.front().is_rational() && eigs.front().rational_value() == Rat(d.k))) {
    out.checks.push_back(make_check(
        "spectrum_roots", CheckStatus::Inconclusive,
        {{"largest", eigs.front().to_string()}, {"k", d.k.str()}},
        "largest eigenvalue is not the valency"));
    return out;
  }

  Spectrum spec;
  spec.n = numerator(d.n);
  spec.k = d.k;

  std::string mult_list;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    MultiplicityResult m = multiplicity(d, eigs[i], opt);
    if (m.kind == MultiplicityResult::Kind::NonIntegral) {
      out.checks.push_back(make_check(
          "multiplicity_integrality", CheckStatus::Fail,
          {{"theta", eigs[i].to_string()}, {"detail", m.detail}},
          "multiplicity of " + eigs[i].to_string() + " is not a positive integer"));
      return out;
    }
    if (m.kind == MultiplicityResult::Kind::Inconclusive) {
      out.checks.push_back(make_check(
          "multiplicity_integrality", CheckStatus::Inconclusive,
          {{"theta", eigs[i].to_string()}, {"detail", m.detail}}, m.detail));
      return out;
    }
    if (!mult_list.empty()) mult_list += ',';
    mult_list += m.value.str();
    spec.eigs.push_back(EigenvaluePair{std::move(eigs[i]), m.value});
  }

  // internal consistency: the multiplicities must sum to n
  Int total = 0;
  for (const auto& e : spec.eigs) total += e.multiplicity;
  if (total != spec.n) throw std::logic_error("spectrum: multiplicities do not sum to n");

  out.checks.push_back(make_check("multiplicity_integrality", CheckStatus::Pass,
                                  {{"multiplicities", mult_list}},
                                  "all multiplicities are positive integers"));
  out.spectrum = std::move(spec);
  return out;
}

bool terminal_identity_holds(const DerivedParameters& d, const AlgebraicNumber& theta) {
  std::size_t D = d.diameter();
  if (theta.is_rational()) {
    const Rat& t = theta.rational_value();
    std::vector<Rat> u = standard_sequence(d, t);
    Rat lhs = Rat(d.array.c_at(D)) * u[D - 1] + Rat(d.a[D]) * u[D];
    return lhs == t * u[D];
  }
  RatPoly g(theta.minimal_poly());
  std::vector<RatPoly> u = standard_sequence_mod(d, g);
  RatPoly x{std::vector<Rat>{Rat(0), Rat(1)}};
  RatPoly lhs = Rat(d.array.c_at(D)) * u[D - 1] + Rat(d.a[D]) * u[D] - x * u[D];
  lhs = divmod(lhs, g).second;
  if (lhs.is_zero()) return true;
  return theta.sign_at(lhs.to_primitive_int()) == 0;
}

bool verify_trace_identities(const DerivedParameters& d,
                             const std::vector<AlgebraicNumber>& eigenvalues,
                             const Rat& tolerance, int max_steps) {
  if (!d.k_dist_integral() || !is_integer(d.n))
    throw std::invalid_argument("verify_trace_identities: non-integral parameters");
  Rat n(d.n), k(d.k);

  struct Item {
    const AlgebraicNumber* theta;
    Rat lo, hi;  // live enclosure for irrational values
  };
  std::vector<Item> items;
  for (const auto& t : eigenvalues) {
    RatInterval e = t.enclosure();
    items.push_back({&t, e.lo, e.hi});
  }

  for (int step = 0; step <= max_steps; ++step) {
    RatInterval sum_m{Rat(0)}, sum_mt{Rat(0)}, sum_mt2{Rat(0)};
    for (auto& it : items) {
      RatInterval th = it.theta->is_rational() ? RatInterval(it.theta->rational_value())
                                               : RatInterval(it.lo, it.hi);
      RatInterval s = weighted_square_sum(d, th);
      RatInterval m = RatInterval(n) / s;
      sum_m = sum_m + m;
      sum_mt = sum_mt + m * th;
      sum_mt2 = sum_mt2 + m * square(th);
    }
    bool narrow = sum_m.width() <= tolerance && sum_mt.width() <= tolerance &&
                  sum_mt2.width() <= tolerance;
    if (narrow)
      return sum_m.contains(n) && sum_mt.contains(Rat(0)) && sum_mt2.contains(n * k);
    // a provable violation can be reported before reaching the tolerance
    if (!sum_m.contains(n) || !sum_mt.contains(Rat(0)) || !sum_mt2.contains(n * k)) return false;
    for (auto& it : items)
      if (!it.theta->is_rational()) it.theta->refine_once(it.lo, it.hi);
  }
  return false;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b) {
  if (a.n != b.n || a.eigs.size() != b.eigs.size()) return false;
  for (std::size_t i = 0; i < a.eigs.size(); ++i) {
    if (a.eigs[i].multiplicity != b.eigs[i].multiplicity) return false;
    if (a.eigs[i].value.compare(b.eigs[i].value) != 0) return false;
  }
  return true;
}

std::string spectrum_to_string(const Spectrum& s) {
  std::string out;
  for (std::size_t i = 0; i < s.eigs.size(); ++i) {
    if (i) out += ' ';
    out += s.eigs[i].value.to_string() + "^" + s.eigs[i].multiplicity.str();
  }
  return out;
}

}  // namespace drg
