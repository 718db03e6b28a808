#include "drg/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>

#include "drg/algebraic.hpp"
#include "drg/bounds.hpp"

namespace drg {

SmallGraph::SmallGraph(int n, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("vertex count must be between 0 and 256");
  }
  adj_.assign(static_cast<std::size_t>(n), {});
}

void SmallGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex id out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u][static_cast<std::size_t>(v)] = true;
  adj_[v][static_cast<std::size_t>(u)] = true;
}

long long SmallGraph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

// ---------------------------------------------------------------------------
// Named families.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> two_subsets(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

bool disjoint(std::pair<int, int> a, std::pair<int, int> b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

SmallGraph build_complete(int n) {
  SmallGraph g(n, "complete(" + std::to_string(n) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SmallGraph build_cycle(int n) {
  SmallGraph g(n, "cycle(" + std::to_string(n) + ")");
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SmallGraph build_petersen() {
  auto verts = two_subsets(5);  // Kneser graph on 2-subsets of a 5-set
  SmallGraph g(static_cast<int>(verts.size()), "petersen");
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (disjoint(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

SmallGraph build_cube(int d) {
  SmallGraph g(1 << d, "cube(" + std::to_string(d) + ")");
  for (int u = 0; u < (1 << d); ++u)
    for (int b = 0; b < d; ++b)
      if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
  return g;
}

SmallGraph build_triangular(int n) {
  auto verts = two_subsets(n);
  SmallGraph g(static_cast<int>(verts.size()), "triangular(" + std::to_string(n) + ")");
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!disjoint(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

SmallGraph build_cocktail(int n) {
  SmallGraph g(2 * n, "cocktail(" + std::to_string(n) + ")");
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j)
      if (!(i / 2 == j / 2)) g.add_edge(i, j);  // skip the matched pair
  return g;
}

[[noreturn]] void unknown_graph(const std::string& s) {
  throw std::invalid_argument("unknown graph '" + s +
                              "'; known families: complete(n), cycle(n), petersen, cube(d), "
                              "triangular(n), cocktail(n)");
}

}  // namespace

SmallGraph build_named_graph(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;

  std::string base = s;
  long long arg = -1;
  bool has_arg = false;
  if (auto p = s.find('('); p != std::string::npos) {
    if (s.empty() || s.back() != ')') unknown_graph(s);
    base = s.substr(0, p);
    std::string inner = s.substr(p + 1, s.size() - p - 2);
    if (inner.empty() || inner.size() > 6) unknown_graph(s);
    for (char ch : inner)
      if (!std::isdigit(static_cast<unsigned char>(ch))) unknown_graph(s);
    arg = std::stoll(inner);
    has_arg = true;
  }

  auto need = [&](long long lo, long long hi) {
    if (!has_arg || arg < lo || arg > hi) unknown_graph(s);
    return static_cast<int>(arg);
  };
  if (base == "petersen" && !has_arg) return build_petersen();
  if (base == "complete") return build_complete(need(2, 256));
  if (base == "cycle") return build_cycle(need(3, 256));
  if (base == "cube") return build_cube(need(1, 8));
  if (base == "triangular") return build_triangular(need(4, 23));
  if (base == "cocktail") return build_cocktail(need(2, 128));
  unknown_graph(s);
}

std::vector<std::string> oracle_catalog() {
  return {
      "complete(n)    2 <= n <= 256   complete graph on n vertices",
      "cycle(n)       3 <= n <= 256   circuit on n vertices",
      "petersen                       2-subsets of a 5-set, adjacent iff disjoint",
      "cube(d)        1 <= d <= 8     d-dimensional hypercube (2^d vertices)",
      "triangular(n)  4 <= n <= 23    2-subsets of an n-set, adjacent iff intersecting",
      "cocktail(n)    2 <= n <= 128   2n vertices minus a perfect matching",
  };
}

// ---------------------------------------------------------------------------
// Distances and array extraction.
// ---------------------------------------------------------------------------

DistanceData bfs_all_pairs(const SmallGraph& g) {
  int n = g.size();
  DistanceData dd;
  dd.dist.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& dist = dd.dist[s];
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (g.edge(u, v) && dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
  }
  dd.connected = n > 0;
  for (int v = 0; v < n; ++v) {
    if (dd.dist[0][v] < 0) dd.connected = false;
  }
  dd.diameter = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) dd.diameter = std::max(dd.diameter, dd.dist[u][v]);
  return dd;
}

ExtractionOutcome extract_intersection_array(const SmallGraph& g) {
  int n = g.size();
  if (n < 2) throw std::invalid_argument("intersection array needs at least 2 vertices");
  DistanceData dd = bfs_all_pairs(g);
  if (!dd.connected) throw std::invalid_argument("disconnected graph");

  int k = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != k) {
      return NotDistanceRegular{0, v,
                                "degrees differ: deg(0) = " + std::to_string(k) + ", deg(" +
                                    std::to_string(v) + ") = " + std::to_string(g.degree(v))};
    }
  }

  int D = dd.diameter;
  std::vector<int> rc(D + 1, -1), ra(D + 1, -1), rb(D + 1, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int i = dd.dist[x][y];
      int c = 0, a = 0, b = 0;
      for (int z = 0; z < n; ++z) {
        if (!g.edge(y, z)) continue;
        int dz = dd.dist[x][z];
        if (dz == i - 1) ++c;
        else if (dz == i) ++a;
        else if (dz == i + 1) ++b;
      }
      if (rc[i] < 0) {
        rc[i] = c;
        ra[i] = a;
        rb[i] = b;
      } else if (c != rc[i] || a != ra[i] || b != rb[i]) {
        std::string which = c != rc[i] ? "c" : a != ra[i] ? "a" : "b";
        int got = c != rc[i] ? c : a != ra[i] ? a : b;
        int want = c != rc[i] ? rc[i] : a != ra[i] ? ra[i] : rb[i];
        return NotDistanceRegular{x, y,
                                  which + "_" + std::to_string(i) + "(x,y) = " +
                                      std::to_string(got) + " but an earlier pair gave " +
                                      std::to_string(want)};
      }
    }
  }

  IntersectionArray arr;
  for (int i = 0; i < D; ++i) arr.b.emplace_back(rb[i]);
  for (int i = 1; i <= D; ++i) arr.c.emplace_back(rc[i]);
  return arr;
}

// ---------------------------------------------------------------------------
// Exact characteristic polynomial and spectrum.
// ---------------------------------------------------------------------------

namespace {

// Fraction-free (Bareiss) determinant: every division below is exact over Z.
Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  std::size_t n = m.size();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Int(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[col][col];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

IntPoly brute_characteristic_polynomial(const SmallGraph& g) {
  int n = g.size();
  if (n == 0) return IntPoly{std::vector<Int>{Int(1)}};

  // Evaluate det(tI - A) at t = 0..n, then Newton-interpolate the degree-n
  // polynomial through the n+1 points.
  RatPoly p;
  RatPoly basis{std::vector<Rat>{Rat(1)}};
  for (int t = 0; t <= n; ++t) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) {
      m[i][i] = t;
      for (int j = 0; j < n; ++j)
        if (g.edge(i, j)) m[i][j] -= 1;
    }
    Rat x(t);
    Rat y(bareiss_determinant(std::move(m)));
    Rat delta = y - p.eval(x);
    if (!(delta == 0)) p = p + (delta / basis.eval(x)) * basis;
    basis = basis * RatPoly{std::vector<Rat>{-x, Rat(1)}};
  }

  IntPoly out;
  out.coeff.reserve(p.coeff.size());
  for (const Rat& c : p.coeff) {
    if (!is_integer(c)) throw std::logic_error("characteristic polynomial not integral");
    out.coeff.push_back(numerator(c));
  }
  out.trim();
  if (out.degree() != n || !out.is_monic())
    throw std::logic_error("characteristic polynomial has wrong shape");
  return out;
}

Spectrum brute_spectrum(const SmallGraph& g) {
  if (g.size() == 0) throw std::invalid_argument("empty graph has no spectrum");
  IntPoly chi = brute_characteristic_polynomial(g);

  std::vector<std::pair<AlgebraicNumber, Int>> found;
  for (const SquarefreeFactor& f : squarefree_decompose(chi)) {
    for (const IsolatedRoot& r : isolate_real_roots(f.factor)) {
      AlgebraicNumber v = AlgebraicNumber::from_isolated(r);
      v.tighten(Rat(1, 1048576));
      found.emplace_back(std::move(v), Int(f.multiplicity));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first.compare(b.first) > 0; });

  Spectrum s;
  s.n = g.size();
  int maxdeg = 0;
  for (int v = 0; v < g.size(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  s.k = maxdeg;
  Int total = 0;
  for (auto& [value, mult] : found) {
    total += mult;
    s.eigs.push_back(EigenvaluePair{std::move(value), mult});
  }
  // A symmetric 0/1 matrix has a full set of real eigenvalues.
  if (total != Int(g.size())) throw std::logic_error("brute spectrum lost real roots");
  return s;
}

SmallGraph local_graph(const SmallGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw std::out_of_range("vertex id out of range");
  std::vector<int> nb;
  for (int u = 0; u < g.size(); ++u)
    if (g.edge(v, u)) nb.push_back(u);
  SmallGraph out(static_cast<int>(nb.size()),
                 g.name().empty() ? "" : g.name() + " local(" + std::to_string(v) + ")");
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.edge(nb[i], nb[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

// ---------------------------------------------------------------------------
// Exact clique / coclique search.
// ---------------------------------------------------------------------------

namespace {

class CliqueSolver {
 public:
  explicit CliqueSolver(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  int solve() {
    std::uint64_t all =
        adj_.size() == 64 ? ~0ULL : ((std::uint64_t(1) << adj_.size()) - 1);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t cand, int size) {
    if (size > best_) best_ = size;
    if (cand == 0) return;

    // Greedy colouring: a clique inside `cand` uses distinct colours, so
    // size + colour(v) bounds any extension through v.
    std::vector<std::pair<int, int>> order;  // (vertex, colour), colour nondecreasing
    std::uint64_t uncoloured = cand;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      std::uint64_t avail = uncoloured;
      while (avail) {
        int v = __builtin_ctzll(avail);
        std::uint64_t bit = std::uint64_t(1) << v;
        avail &= ~(adj_[v] | bit);
        uncoloured &= ~bit;
        order.emplace_back(v, colour);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      auto [v, col] = order[i];
      if (size + col <= best_) return;  // colours only shrink leftwards
      expand(cand & adj_[v], size + 1);
      cand &= ~(std::uint64_t(1) << v);
    }
  }

  std::vector<std::uint64_t> adj_;
  int best_ = 0;
};

}  // namespace

std::pair<int, int> max_clique_and_coclique(const SmallGraph& g) {
  int n = g.size();
  if (n > 64) throw std::length_error("exact clique search is capped at 64 vertices");
  if (n == 0) return {0, 0};
  std::uint64_t all = n == 64 ? ~0ULL : ((std::uint64_t(1) << n) - 1);
  std::vector<std::uint64_t> adj(n, 0), comp(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v)
      if (u != v && g.edge(u, v)) adj[u] |= std::uint64_t(1) << v;
    comp[u] = all & ~adj[u] & ~(std::uint64_t(1) << u);
  }
  return {CliqueSolver(adj).solve(), CliqueSolver(comp).solve()};
}

int max_nonadjacent_common_neighbors(const SmallGraph& g) {
  int best = 0;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.edge(u, v)) continue;
      best = std::max(best, static_cast<int>((g.neighbors(u) & g.neighbors(v)).count()));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Oracle-vs-analytic equivalence suite.
// ---------------------------------------------------------------------------

OracleVerification oracle_verify(const std::string& name) {
  OracleVerification out;
  out.name = name;
  SmallGraph g = build_named_graph(name);
  auto& rows = out.rows;

  rows.push_back(make_check("oracle_build", CheckStatus::Pass,
                            {{"n", std::to_string(g.size())},
                             {"edges", std::to_string(g.edge_count())}},
                            "built " + g.name()));

  ExtractionOutcome eo = extract_intersection_array(g);
  if (const auto* ndr = std::get_if<NotDistanceRegular>(&eo)) {
    rows.push_back(make_check("oracle_array", CheckStatus::NotApplicable,
                              {{"x", std::to_string(ndr->x)},
                               {"y", std::to_string(ndr->y)},
                               {"what", ndr->what}},
                              "not distance-regular: " + ndr->what));
    return out;
  }
  const auto& arr = std::get<IntersectionArray>(eo);
  rows.push_back(make_check("oracle_array", CheckStatus::Pass,
                            {{"array", render_array(arr)}},
                            "distance-regular with array " + render_array(arr)));

  DerivedParameters d = derive_parameters(arr);
  SpectrumOutcome so = compute_spectrum(d);
  Spectrum brute = brute_spectrum(g);
  if (!so.spectrum) {
    rows.push_back(make_check("oracle_spectrum_match", CheckStatus::Fail,
                              {{"brute", spectrum_to_string(brute)}},
                              "analytic spectrum unavailable for a realized array"));
  } else {
    bool same = spectra_equal(*so.spectrum, brute);
    rows.push_back(make_check("oracle_spectrum_match",
                              same ? CheckStatus::Pass : CheckStatus::Fail,
                              {{"analytic", spectrum_to_string(*so.spectrum)},
                               {"brute", spectrum_to_string(brute)}},
                              same ? "array spectrum equals brute-force spectrum exactly"
                                   : "spectra differ"));
  }

  // Local structure: every local graph must be a_1-regular on k vertices.
  {
    Int k = d.k;
    Int a1 = d.diameter() >= 1 ? d.a[1] : Int(0);
    int bad_vertex = -1;
    std::string why;
    for (int v = 0; v < g.size() && bad_vertex < 0; ++v) {
      SmallGraph loc = local_graph(g, v);
      if (Int(loc.size()) != k) {
        bad_vertex = v;
        why = "local graph at " + std::to_string(v) + " has " + std::to_string(loc.size()) +
              " vertices, expected k = " + to_canonical(k);
        break;
      }
      for (int u = 0; u < loc.size(); ++u) {
        if (Int(loc.degree(u)) != a1) {
          bad_vertex = v;
          why = "local graph at " + std::to_string(v) + " has a vertex of degree " +
                std::to_string(loc.degree(u)) + ", expected a_1 = " + to_canonical(a1);
          break;
        }
      }
    }
    rows.push_back(make_check("oracle_local_structure",
                              bad_vertex < 0 ? CheckStatus::Pass : CheckStatus::Fail,
                              {{"k", to_canonical(k)}, {"a_1", to_canonical(a1)}},
                              bad_vertex < 0
                                  ? "every local graph is a_1-regular on k vertices"
                                  : why));
  }

  // Local minimum eigenvalue against the analytic bound.
  if (d.diameter() < 2 || !so.spectrum ||
      so.spectrum->theta_second().compare(Rat(-1)) <= 0) {
    rows.push_back(make_check("oracle_local_min_eig", CheckStatus::NotApplicable, {},
                              "local eigenvalue bound not applicable"));
  } else {
    AlgebraicNumber bound =
        local_min_eigenvalue_bound(so.spectrum->theta_second(), arr.b_at(1));
    Spectrum ls = brute_spectrum(local_graph(g, 0));
    const AlgebraicNumber& local_min = ls.theta_min();
    bool ok = local_min.compare(bound) >= 0;
    rows.push_back(make_check("oracle_local_min_eig",
                              ok ? CheckStatus::Pass : CheckStatus::Fail,
                              {{"local_min", local_min.to_string()},
                               {"bound", bound.to_string()}},
                              ok ? "local spectrum respects the bound" :
                                   "local spectrum dips below the analytic bound"));
  }

  if (g.size() > 64) {
    rows.push_back(make_check("oracle_clique_delsarte", CheckStatus::NotApplicable, {},
                              "clique search capped at 64 vertices"));
    rows.push_back(make_check("oracle_coclique_claw", CheckStatus::NotApplicable, {},
                              "clique search capped at 64 vertices"));
  } else {
    auto [clique, coclique] = max_clique_and_coclique(g);

    if (!so.spectrum || so.spectrum->theta_min().compare(Rat(-1)) >= 0) {
      rows.push_back(make_check("oracle_clique_delsarte", CheckStatus::NotApplicable,
                                {{"max_clique", std::to_string(clique)}},
                                "clique bound not applicable (complete graph)"));
    } else {
      CliqueBound cb = delsarte_clique_bound(d.k, so.spectrum->theta_min());
      bool ok = Int(clique) <= cb.floor_value;
      rows.push_back(make_check("oracle_clique_delsarte",
                                ok ? CheckStatus::Pass : CheckStatus::Fail,
                                {{"max_clique", std::to_string(clique)},
                                 {"floor", to_canonical(cb.floor_value)}},
                                ok ? "maximum clique respects the clique bound"
                                   : "maximum clique exceeds the clique bound"));
    }

    if (coclique < 2) {
      rows.push_back(make_check("oracle_coclique_claw", CheckStatus::NotApplicable,
                                {{"max_coclique", std::to_string(coclique)}},
                                "no coclique of size 2 (complete graph)"));
    } else {
      int mu = max_nonadjacent_common_neighbors(g);
      Int n_int(g.size());
      Int k = d.k;
      int bad_s = -1;
      for (int s = 2; s <= coclique; ++s) {
        if (claw_bound(n_int, k, Int(mu), Int(s)).status == CheckStatus::Fail) {
          bad_s = s;
          break;
        }
      }
      rows.push_back(make_check(
          "oracle_coclique_claw", bad_s < 0 ? CheckStatus::Pass : CheckStatus::Fail,
          {{"max_coclique", std::to_string(coclique)}, {"max_mu", std::to_string(mu)}},
          bad_s < 0 ? "the claw bound never refutes a realized coclique"
                    : "claw bound FAILs at s = " + std::to_string(bad_s) +
                          " although a coclique of that size exists"));
    }
  }

  for (const auto& r : rows)
    if (r.status == CheckStatus::Fail) out.all_ok = false;
  return out;
}

}  // namespace drg
