#pragma once

// Spectrum of an intersection array: eigenvalues of the tridiagonal
// intersection matrix (exactly isolated) and their multiplicities from the
// standard-sequence formula m(theta) = n / sum_i k_i u_i(theta)^2.
// Rational eigenvalues are handled with pure rational arithmetic; irrational
// ones with exact interval refinement plus an algebraic certificate, so a
// returned multiplicity is proven, never merely approximated.

#include "drg/algebraic.hpp"
#include "drg/array.hpp"
#include "drg/check.hpp"
#include "drg/interval.hpp"
#include "drg/polynomial.hpp"

#include <optional>
#include <vector>

namespace drg {

struct IntersectionMatrix {
  std::vector<Int> sub;    // c_1 .. c_D
  std::vector<Int> diag;   // a_0 .. a_D
  std::vector<Int> super;  // b_0 .. b_{D-1}

  std::size_t order() const { return diag.size(); }
};

IntersectionMatrix build_intersection_matrix(const DerivedParameters& d);

// monic char poly det(xI - M) via the tridiagonal three-term recurrence
IntPoly characteristic_polynomial(const IntersectionMatrix& m);

struct SpectrumOptions {
  // Cap on interval-bisection refinement steps (one step = one bit of
  // interval width).  Exhausting it yields INCONCLUSIVE, never a guess.
  int precision_bits = 512;
};

struct EigenvaluePair {
  AlgebraicNumber value;
  Int multiplicity;
};

struct Spectrum {
  std::vector<EigenvaluePair> eigs;  // strictly descending eigenvalues
  Int n;                             // vertex count
  Int k;                             // valency = largest eigenvalue

  std::size_t count() const { return eigs.size(); }
  const AlgebraicNumber& theta_second() const { return eigs.at(1).value; }
  const AlgebraicNumber& theta_min() const { return eigs.back().value; }
};

struct MultiplicityResult {
  enum class Kind { Integer, NonIntegral, Inconclusive } kind;
  Int value;           // when Integer
  std::string detail;  // exact witness / explanation otherwise
};

// Standard sequence u_0..u_D at rational theta (exact) or over an enclosure.
std::vector<Rat> standard_sequence(const DerivedParameters& d, const Rat& theta);
std::vector<RatInterval> standard_sequence(const DerivedParameters& d, const RatInterval& theta);

// Certified multiplicity of one eigenvalue.  Requires integral k_i.
MultiplicityResult multiplicity(const DerivedParameters& d, const AlgebraicNumber& theta,
                                const SpectrumOptions& opt = {});

// Full spectrum computation.  `checks` always carries the integrality row
// (id "multiplicity_integrality"); degenerate char polys yield an
// INCONCLUSIVE "spectrum_squarefree"/"spectrum_roots" row and no spectrum.
struct SpectrumOutcome {
  std::optional<Spectrum> spectrum;
  std::vector<CheckResult> checks;
};
SpectrumOutcome compute_spectrum(const DerivedParameters& d, const SpectrumOptions& opt = {});

// Test instrument: does c_D u_{D-1} + a_D u_D = theta u_D hold exactly?
// (Equivalent to theta being a root of the characteristic polynomial.)
bool terminal_identity_holds(const DerivedParameters& d, const AlgebraicNumber& theta);

// Test instrument: verify sum(m) = n, sum(m*theta) = 0, sum(m*theta^2) = n*k
// with multiplicities taken as raw values n / sum k_i u_i^2 (not rounded).
// Rational eigenvalues contribute exactly; irrational ones are enclosed and
// refined until every sum's interval is narrower than `tolerance`.  Returns
// true iff each target then lies inside its interval.
bool verify_trace_identities(const DerivedParameters& d,
                             const std::vector<AlgebraicNumber>& eigenvalues,
                             const Rat& tolerance, int max_steps = 4096);

// Render "80^1 26^80 5^144 -4^720" (descending), used by reports.
std::string spectrum_to_string(const Spectrum& s);

// Exact equality: same descending eigenvalue list (compared as algebraic
// numbers) with identical multiplicities.
bool spectra_equal(const Spectrum& a, const Spectrum& b);

}  // namespace drg
