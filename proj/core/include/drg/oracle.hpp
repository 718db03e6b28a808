#pragma once

// Brute-force ground truth on small concrete graphs: construct named graph
// families, detect distance-regularity by exhaustive counting, compute exact
// spectra via fraction-free integer elimination, and find maximum cliques and
// cocliques by branch-and-bound.  Everything here is an independent witness
// used to validate the analytic modules — no result is shared with them.

#include <bitset>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "drg/array.hpp"
#include "drg/check.hpp"
#include "drg/polynomial.hpp"
#include "drg/spectrum.hpp"

namespace drg {

class SmallGraph {
 public:
  static constexpr int kMaxVertices = 256;

  SmallGraph() = default;
  explicit SmallGraph(int n, std::string name = "");

  int size() const { return n_; }
  const std::string& name() const { return name_; }

  bool edge(int u, int v) const { return adj_[u][static_cast<std::size_t>(v)]; }
  void add_edge(int u, int v);  // symmetric; throws std::out_of_range / loops
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  long long edge_count() const;
  const std::bitset<kMaxVertices>& neighbors(int v) const { return adj_[v]; }

 private:
  int n_ = 0;
  std::string name_;
  std::vector<std::bitset<kMaxVertices>> adj_;
};

// Named families (case-sensitive):
//   complete(n)    2 <= n <= 256
//   cycle(n)       3 <= n <= 256
//   petersen
//   cube(d)        1 <= d <= 8        2^d vertices
//   triangular(n)  4 <= n <= 23       2-subsets of an n-set, adjacent iff intersecting
//   cocktail(n)    2 <= n <= 128      K_{n x 2}: 2n vertices minus a perfect matching
// Throws std::invalid_argument for anything else.
SmallGraph build_named_graph(const std::string& name);

// Human-readable catalog lines for `oracle list`.
std::vector<std::string> oracle_catalog();

struct DistanceData {
  std::vector<std::vector<int>> dist;  // BFS distances; -1 = unreachable
  int diameter = 0;
  bool connected = false;
};
DistanceData bfs_all_pairs(const SmallGraph& g);

// Witness that intersection numbers are not constant: the ordered pair (x, y)
// whose counts differ from an earlier pair at the same distance.
struct NotDistanceRegular {
  int x = -1;
  int y = -1;
  std::string what;
};
using ExtractionOutcome = std::variant<IntersectionArray, NotDistanceRegular>;

// Checks every ordered pair at every distance (an oracle samples nothing).
// Throws std::invalid_argument on disconnected graphs or fewer than 2 vertices.
ExtractionOutcome extract_intersection_array(const SmallGraph& g);

// Exact det(xI - A) by evaluation at integer points (fraction-free Bareiss
// elimination over the integers) and Newton interpolation.
IntPoly brute_characteristic_polynomial(const SmallGraph& g);

// Exact spectrum: squarefree factorization of the characteristic polynomial,
// real-root isolation per factor.  `k` is set to the maximum degree (the
// valency for regular graphs).
Spectrum brute_spectrum(const SmallGraph& g);

// Induced subgraph on the neighbours of v (vertex order inherited).
SmallGraph local_graph(const SmallGraph& g, int v);

// Exact (max clique, max coclique) by colouring-bounded branch-and-bound.
// Throws std::length_error when the graph has more than 64 vertices.
std::pair<int, int> max_clique_and_coclique(const SmallGraph& g);

// Largest common-neighbour count over non-adjacent vertex pairs (0 when the
// graph is complete): the `c` parameter of claw_bound for a concrete graph.
int max_nonadjacent_common_neighbors(const SmallGraph& g);

// The full oracle-vs-analytic equivalence suite for one named graph: build,
// extract the array, compare brute spectrum against the analytic spectrum of
// the array, check local-graph structure and the local eigenvalue bound,
// and test clique/coclique numbers against the clique and claw bounds.
// Row ids: oracle_build, oracle_array, oracle_spectrum_match,
// oracle_local_structure, oracle_local_min_eig, oracle_clique_delsarte,
// oracle_coclique_claw.
struct OracleVerification {
  std::string name;
  std::vector<CheckResult> rows;
  bool all_ok = true;  // no row FAILed
};
OracleVerification oracle_verify(const std::string& name);

}  // namespace drg
