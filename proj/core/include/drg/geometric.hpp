#pragma once

// Clique-geometry parameter ladder.  A graph is geometric when its vertex set
// is covered by a family of Delsarte cliques (cliques meeting the smallest-
// eigenvalue bound) such that every edge lies in exactly one of them.  For a
// distance-regular graph with integral smallest eigenvalue theta_D | k the
// family forces two integer sequences:
//   psi_i  = how many vertices of a clique through x are at distance i from
//            a vertex x at distance i from the clique (psi_0 = 1),
//   tau_i  = how many cliques through a vertex y at distance i from x
//            contain a neighbour of y closer to x.
// They satisfy, with zeta = 1 - k/theta_D (the clique size):
//   c_i = tau_i * psi_{i-1}                      (1 <= i <= D)
//   b_i = -(theta_D + tau_i) * (zeta - psi_i)    (1 <= i <= D-1)
//   1 <= psi_i <= zeta - 1,  tau_i >= 1.
// The ladder solves forward uniquely; any non-integral or out-of-range value
// proves no such clique geometry exists.  The tau_2 >= psi_1 inequality
// (Koolen-Bang, valid whenever c_2 >= 2) then refutes entire parameter sets.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "drg/algebraic.hpp"
#include "drg/array.hpp"
#include "drg/check.hpp"
#include "drg/rational.hpp"

namespace drg {

struct GeometricParameters {
  Int theta_min;         // smallest eigenvalue, a negative integer
  Int zeta;              // clique size 1 - k/theta_min, an integer >= 2
  std::vector<Int> tau;  // tau[i-1] = tau_i for 1 <= i <= D
  std::vector<Int> psi;  // psi[i]   = psi_i for 0 <= i <= D-1 (psi[0] = 1)
};

// Why the ladder has no solution.  `reason` is one of the stable codes:
//   "irrational smallest eigenvalue"  theta_D is not rational
//   "clique size non-integral"        zeta = 1 - k/theta_D not an integer >= 2
//   "ladder_integrality"              some tau_i or psi_i is non-integral
//   "ladder_range"                    some psi_i outside [1, zeta-1] or tau_i < 1
//   "degenerate: tau_i = -theta_D"    division by theta_D + tau_i = 0
struct NotGeometric {
  std::string reason;    // stable machine-readable code (see above)
  std::size_t index;     // ladder index i at fault; 0 when not ladder-specific
  std::string equation;  // the violated equation, with values substituted
};

using GeometricOutcome = std::variant<GeometricParameters, NotGeometric>;

// Solve the ladder forward from (array, smallest eigenvalue).  Total and
// deterministic: every input yields parameters satisfying all invariants or
// a NotGeometric with a stable reason code.
GeometricOutcome solve_geometric_parameters(const DerivedParameters& d,
                                            const AlgebraicNumber& theta_min);

// Reconstruct the intersection array from solved ladder parameters
// (b_0 = -theta(zeta-1); b_i, c_i from the ladder equations).  Inverse of
// solve_geometric_parameters on its image — the round-trip test instrument.
IntersectionArray reconstruct_intersection_array(const GeometricParameters& g);

// Check row for the solve step (id "geom_solve"): PASS with the full ladder
// as witnesses, or NOT_APPLICABLE carrying the NotGeometric reason (no
// clique geometry exists, which obstructs nothing by itself).
CheckResult geometric_solve_check(const GeometricOutcome& outcome);

// tau_2 >= psi_1 test (id "geom_kb").  NOT_APPLICABLE when c_2 < 2 (the
// inequality needs c_2 >= 2) or the diameter is < 2; PASS when tau_2 >= psi_1;
// FAIL otherwise — a geometric graph with these parameters cannot exist.
CheckResult koolen_bang_check(const GeometricParameters& params, const Int& c_2);

// Pipeline wrapper: NOT_APPLICABLE when the ladder did not solve.
CheckResult koolen_bang_check(const GeometricOutcome& outcome, const Int& c_2);

}  // namespace drg
