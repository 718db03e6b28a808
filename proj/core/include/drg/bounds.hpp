#pragma once

// Inequality battery for intersection arrays: clique-size bounds from the
// smallest eigenvalue, coclique (claw) counting bounds, the local-graph
// minimum-eigenvalue bound, 2x2 quotient-matrix interlacing tests, and
// equality-case inclusion-exclusion counts.
//
// Every comparison is exact: rational arithmetic throughout, with algebraic
// (irrational) eigenvalues handled through sign certificates, never floats.

#include <vector>

#include "drg/algebraic.hpp"
#include "drg/array.hpp"
#include "drg/check.hpp"
#include "drg/rational.hpp"
#include "drg/spectrum.hpp"

namespace drg {

// ---------------------------------------------------------------------------
// Clique bound from the smallest eigenvalue.
// ---------------------------------------------------------------------------

struct CliqueBound {
  AlgebraicNumber bound;  // 1 - k/theta_min, exact
  Int floor_value;        // largest integer <= bound: max clique size
  Int local_floor;        // floor_value - 1: max clique size inside a local graph
};

// Exact clique-size bound 1 - k/theta_min for a k-regular graph with smallest
// eigenvalue theta_min < -1.  Throws std::domain_error when theta_min >= -1
// (only complete graphs have smallest eigenvalue -1).
CliqueBound delsarte_clique_bound(const Int& k, const AlgebraicNumber& theta_min);

// Pipeline wrapper (check id "delsarte_clique"): informational PASS carrying
// the exact bound, its floor, and the local-graph corollary floor-1;
// NOT_APPLICABLE when the smallest eigenvalue is >= -1.
CheckResult delsarte_clique_check(const Spectrum& spectrum);

// ---------------------------------------------------------------------------
// Claw (coclique counting) bounds.
// ---------------------------------------------------------------------------

// Counting bound against a size-s coclique in a k-regular n-vertex graph in
// which non-adjacent vertices have at most c common neighbours: the forced
// average pairwise common-neighbour count is L = ((k+1)s - n) / C(s,2).
// Status (check id "claw_global"):
//   PASS      L < c   (no contradiction)
//   EQUALITY  L = c   (a size-s coclique is extremal: all pairs meet in
//                      exactly c common neighbours)
//   FAIL      L > c   (a size-s coclique cannot exist)
// Witnesses: n, k, c, s, lhs (= L, canonical rational).
// Exact integer comparison: 2((k+1)s - n) vs c*s*(s-1); requires s >= 2.
CheckResult claw_bound(const Int& n, const Int& k, const Int& c, const Int& s);

// The same bound applied inside a local graph: parameters (n, k, c) become
// (k, a_1, c_2 - 1).  Check id "claw_local"; witnesses s, lhs, c_minus_1.
// NOT_APPLICABLE when the diameter is < 2 (no c_2).
CheckResult local_claw_bound(const DerivedParameters& d, const Int& s);

struct ClawScanResult {
  // All EQUALITY rows in scan order, then the first FAIL row (scan stops
  // there).  When the scan finds neither, a single summary PASS row.
  std::vector<CheckResult> rows;
  // True when a FAIL occurred at some s <= ceil(k/(a_1+1)).  A coclique of
  // that size exists in every a_1-regular graph on k vertices, so such a FAIL
  // is an unconditional infeasibility proof, not merely a coclique-size cap.
  bool unconditional_fail = false;
};

// Runs local_claw_bound for s = 2..max_s (max_s <= 0 selects the default
// a_1 + 2, one past the trivial coclique-size ceiling).
ClawScanResult local_claw_scan(const DerivedParameters& d, const Int& max_s = Int(0));

// ---------------------------------------------------------------------------
// Coclique pairwise-common-neighbour mass.
// ---------------------------------------------------------------------------

// Lower bound max(0, s(k+1) - n) on the sum of pairwise common-neighbour
// counts over any s-coclique in a k-regular n-vertex graph.
Int coclique_mu_sum_lower_bound(const Int& n, const Int& k, const Int& s);

// Pipeline wrapper (check id "mu_sum"): informational PASS carrying the bound.
CheckResult mu_sum_check(const Int& n, const Int& k, const Int& s);

// ---------------------------------------------------------------------------
// Local-graph minimum-eigenvalue bound.
// ---------------------------------------------------------------------------

// Exact bound -1 - b_1/(theta_1 + 1): the smallest eigenvalue of every local
// graph is at least this value, where theta_1 is the second-largest
// eigenvalue of the whole graph.  Throws std::domain_error when
// theta_1 <= -1 (impossible for diameter >= 2).
AlgebraicNumber local_min_eigenvalue_bound(const AlgebraicNumber& theta_1, const Int& b_1);

// Pipeline wrapper (check id "local_min_eig"): informational PASS carrying
// the exact bound; NOT_APPLICABLE for diameter < 2 or theta_1 <= -1.
CheckResult local_min_eig_check(const DerivedParameters& d, const Spectrum& spectrum);

// ---------------------------------------------------------------------------
// Quotient-matrix interlacing for two cliques sharing m vertices.
// ---------------------------------------------------------------------------

// Two cliques of sizes v1, v2 > m sharing exactly m vertices induce the
// vertex partition {shared, symmetric difference} with quotient matrix
//   Q = [[m-1, v1+v2-2m], [m, ((v1-m)(v1-m-1)+(v2-m)(v2-m-1))/(v1+v2-2m)]].
// Interlacing forces lambda_min(Q) >= lambda_min of the host graph, so
// lambda_min(Q) < threshold refutes the configuration.  The comparison is
// done without extracting square roots: with t = tr(Q), d = det(Q) and
// p(x) = x^2 - t x + d,
//   lambda_min(Q) <  T  iff  p(T) < 0, or p(T) >= 0 and T > t/2;
//   lambda_min(Q) == T  iff  p(T) = 0 and T <= t/2.
// Check id "interlace_pair": FAIL when lambda_min(Q) < threshold (the two
// cliques cannot coexist), EQUALITY on exact contact, PASS otherwise.
// Throws std::domain_error when m < 1, v1 <= m, or v2 <= m.
CheckResult clique_intersection_interlacing(const Int& v1, const Int& v2, const Int& m,
                                            const AlgebraicNumber& threshold);

struct QuotientScanResult {
  std::vector<CheckResult> pairs;  // ordered by (v1, v2)
  CheckResult summary;             // check id "interlace_scan"
};

// Runs clique_intersection_interlacing for every v_lo <= v1 <= v2 <= v_hi.
// The summary row is FAIL when every pair fails (the whole configuration
// family is excluded), PASS when some pair survives, NOT_APPLICABLE when the
// range is empty.  Throws std::domain_error when m < 1 or v_lo <= m with a
// non-empty range.
QuotientScanResult quotient_scan(const Int& m, const Int& v_lo, const Int& v_hi,
                                 const AlgebraicNumber& threshold);

// ---------------------------------------------------------------------------
// Equality-case non-neighbour counts.
// ---------------------------------------------------------------------------

// Under claw-bound equality (all pairwise common-neighbour counts in the
// coclique equal c and no vertex has three neighbours in it),
// inclusion-exclusion truncates at pairs: exactly
//   N(s) = n - s(k+1) + C(s,2) c
// vertices are non-adjacent to all s chosen coclique vertices.
Int equality_case_nonneighbor_count(const Int& n, const Int& k, const Int& c, const Int& s);

// Pipeline wrapper (check id "eq_case_count"): PASS with the count as
// witness; FAIL when the count is negative (the equality-case assumptions
// are contradictory).  Requires s >= 1.
CheckResult eq_case_count_check(const Int& n, const Int& k, const Int& c, const Int& s);

}  // namespace drg
