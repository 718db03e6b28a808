#include "drg/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>
#include <variant>

#include "json.hpp"

#include "drg/bounds.hpp"
#include "drg/geometric.hpp"

namespace drg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_ints(const std::vector<Int>& v, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) out += ',';
    out += to_canonical(v[i]);
  }
  return out;
}

std::string join_rats(const std::vector<Rat>& v, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) out += ',';
    out += to_canonical(v[i]);
  }
  return out;
}

std::string wit(const CheckResult& r, const std::string& key) {
  auto it = r.witnesses.find(key);
  return it == r.witnesses.end() ? std::string("?") : it->second;
}

void append(std::vector<CheckResult>& dst, std::vector<CheckResult> src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

bool any_fail(const std::vector<CheckResult>& rows) {
  for (const auto& r : rows)
    if (r.status == CheckStatus::Fail) return true;
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pipeline.
// ---------------------------------------------------------------------------

FeasibilityReport run_all_checks(const IntersectionArray& arr, const CheckOptions& options) {
  FeasibilityReport rep;
  rep.input = render_array(arr);
  rep.array = arr;
  DerivedParameters d = derive_parameters(arr);
  rep.derived = d;

  std::vector<CheckResult> basic = basic_feasibility(d);
  bool basic_failed = has_basic_failure(basic);
  append(rep.checks, std::move(basic));
  if (basic_failed) {
    // Later stages divide by the very quantities that just failed.
    rep.verdict = Verdict::Infeasible;
    return rep;
  }

  SpectrumOptions sopt;
  sopt.precision_bits = options.precision_bits;
  SpectrumOutcome so = compute_spectrum(d, sopt);
  bool spectrum_failed = any_fail(so.checks);
  append(rep.checks, std::move(so.checks));
  if (!so.spectrum) {
    rep.verdict = spectrum_failed ? Verdict::Infeasible : Verdict::NoObstruction;
    return rep;
  }
  rep.spectrum = std::move(so.spectrum);
  const Spectrum& sp = *rep.spectrum;

  rep.checks.push_back(delsarte_clique_check(sp));
  rep.checks.push_back(local_min_eig_check(d, sp));

  ClawScanResult claw = local_claw_scan(d, options.max_s);
  bool claw_unconditional = claw.unconditional_fail;
  append(rep.checks, std::move(claw.rows));

  GeometricOutcome geo = solve_geometric_parameters(d, sp.theta_min());
  rep.checks.push_back(geometric_solve_check(geo));
  CheckResult kb = koolen_bang_check(geo, arr.c_at(2));
  bool geometric_fail = kb.status == CheckStatus::Fail;
  rep.checks.push_back(std::move(kb));

  rep.verdict = claw_unconditional  ? Verdict::Infeasible
                : geometric_fail    ? Verdict::InfeasibleIfGeometric
                                    : Verdict::NoObstruction;
  return rep;
}

FeasibilityReport run_checks_on_line(const std::string& line, const CheckOptions& options) {
  try {
    IntersectionArray arr = parse_array(line);
    FeasibilityReport rep = run_all_checks(arr, options);
    rep.input = line;
    return rep;
  } catch (const ParseError& e) {
    FeasibilityReport rep;
    rep.input = line;
    rep.checks.push_back(make_check("parse", CheckStatus::Fail,
                                    {{"position", std::to_string(e.position())}}, e.what()));
    rep.verdict = Verdict::Error;
    return rep;
  } catch (const std::exception& e) {
    FeasibilityReport rep;
    rep.input = line;
    rep.checks.push_back(make_check("internal", CheckStatus::Fail, {}, e.what()));
    rep.verdict = Verdict::Error;
    return rep;
  }
}

// ---------------------------------------------------------------------------
// Worked example replay.
// ---------------------------------------------------------------------------

ReplayResult replay_paper(const ReplayOptions& options) {
  ReplayResult res;
  FeasibilityReport& rep = res.report;

  const IntersectionArray arr = parse_array("{80,54,12;1,6,60}");
  rep.input = render_array(arr);
  rep.array = arr;
  DerivedParameters d = derive_parameters(arr);
  rep.derived = d;

  auto add_step = [&](int num, const char* title, const char* pinned,
                      const std::string& actual) {
    std::string expected = pinned;
    if (auto it = options.expected_override.find(num); it != options.expected_override.end())
      expected = it->second;
    bool ok = expected == actual;
    res.steps.push_back(ReplayStep{num, title, expected, actual, ok});
    if (!ok)
      res.diagnostic = "step " + std::to_string(num) + " (" + title + "): expected \"" +
                       expected + "\", got \"" + actual + "\"";
    return ok;
  };

  // 1: core parameters.
  append(rep.checks, basic_feasibility(d));
  std::string actual1 = "n=" + to_canonical(d.n) + " a=(" + join_ints(d.a, 1) + ") k=(" +
                        join_rats(d.k_dist, 1) + ")";
  if (!add_step(1, "core parameters", "n=945 a=(25,62,20) k=(80,720,144)", actual1)) return res;

  // 2: spectrum with certified multiplicities.
  SpectrumOutcome so = compute_spectrum(d);
  append(rep.checks, std::move(so.checks));
  std::string actual2 =
      so.spectrum ? spectrum_to_string(*so.spectrum) : std::string("no certified spectrum");
  if (!add_step(2, "spectrum", "80^1 26^80 5^144 -4^720", actual2)) return res;
  rep.spectrum = std::move(so.spectrum);
  const Spectrum& sp = *rep.spectrum;

  // 3: clique bound and its local-graph corollary.
  rep.checks.push_back(delsarte_clique_check(sp));
  CliqueBound cb = delsarte_clique_bound(d.k, sp.theta_min());
  std::string actual3 =
      "bound=" + to_canonical(cb.floor_value) + " local=" + to_canonical(cb.local_floor);
  if (!add_step(3, "clique bounds", "bound=21 local=20", actual3)) return res;

  // 4: floor on local-graph eigenvalues.
  rep.checks.push_back(local_min_eig_check(d, sp));
  AlgebraicNumber floor_bound = local_min_eigenvalue_bound(sp.theta_second(), arr.b_at(1));
  if (!add_step(4, "local eigenvalue floor", "-3", floor_bound.to_string())) return res;

  // 5: local claw bound at the pivotal sizes.
  CheckResult c5 = local_claw_bound(d, Int(5));
  CheckResult c6 = local_claw_bound(d, Int(6));
  std::string actual5 = std::string("s=5 ") + to_string(c5.status) + "; s=6 " +
                        to_string(c6.status) + " lhs=" + wit(c6, "lhs");
  rep.checks.push_back(std::move(c5));
  rep.checks.push_back(std::move(c6));
  if (!add_step(5, "local claw bound", "s=5 EQUALITY; s=6 FAIL lhs=76/15", actual5)) return res;

  // 6: equality-case non-neighbour counts in the local graph (n,k,c) =
  // (k, a_1, c_2 - 1).
  const Int ln = d.k;
  const Int lk = d.a[1];
  const Int lc = arr.c_at(2) - 1;
  std::string actual6;
  for (int s = 2; s <= 4; ++s) {
    rep.checks.push_back(eq_case_count_check(ln, lk, lc, Int(s)));
    if (s > 2) actual6 += ' ';
    actual6 += "N(" + std::to_string(s) +
               ")=" + to_canonical(equality_case_nonneighbor_count(ln, lk, lc, Int(s)));
  }
  if (!add_step(6, "equality-case counts", "N(2)=33 N(3)=17 N(4)=6", actual6)) return res;

  // 7: interlacing scan over two 20-vertex-bound cliques sharing 5 vertices.
  QuotientScanResult qs = quotient_scan(Int(5), Int(11), Int(20), floor_bound);
  std::size_t fails = 0;
  for (const auto& row : qs.pairs)
    if (row.status == CheckStatus::Fail) ++fails;
  std::string actual7 = std::to_string(fails) + "/" + std::to_string(qs.pairs.size()) + " " +
                        to_string(qs.summary.status);
  append(rep.checks, std::move(qs.pairs));
  rep.checks.push_back(std::move(qs.summary));
  if (!add_step(7, "clique interlacing scan", "55/55 FAIL", actual7)) return res;

  // 8: forced pairwise common-neighbour mass of a 4-coclique in the local graph.
  rep.checks.push_back(mu_sum_check(ln, lk, Int(4)));
  std::string actual8 = to_canonical(coclique_mu_sum_lower_bound(ln, lk, Int(4)));
  if (!add_step(8, "coclique mu mass", "24", actual8)) return res;

  // 9: clique-ladder solve.
  GeometricOutcome geo = solve_geometric_parameters(d, sp.theta_min());
  rep.checks.push_back(geometric_solve_check(geo));
  std::string actual9;
  if (const auto* g = std::get_if<GeometricParameters>(&geo)) {
    actual9 = "zeta=" + to_canonical(g->zeta) + " tau=(" + join_ints(g->tau, 0) + ") psi=(" +
              join_ints(g->psi, 0) + ")";
  } else {
    actual9 = "not geometric: " + std::get<NotGeometric>(geo).reason;
  }
  if (!add_step(9, "clique ladder", "zeta=21 tau=(1,2,4) psi=(1,3,15)", actual9)) return res;

  // 10: ladder consistency (tau_2 >= psi_1 must hold in a geometric graph).
  CheckResult kb = koolen_bang_check(geo, arr.c_at(2));
  std::string actual10;
  if (kb.status == CheckStatus::Fail)
    actual10 = "tau_2=" + wit(kb, "tau_2") + " < psi_1=" + wit(kb, "psi_1") + ": FAIL";
  else
    actual10 = to_string(kb.status);
  rep.checks.push_back(std::move(kb));
  if (!add_step(10, "ladder consistency", "tau_2=2 < psi_1=3: FAIL", actual10)) return res;

  // Every step matched.  The ladder contradiction alone only rules out
  // geometric realizations; the certified premise that any realization of
  // this array would be geometric upgrades it to unconditional.
  rep.checks.push_back(make_check(
      "geometric_premise", CheckStatus::Pass, {},
      "certified premise: any graph realizing this array would be geometric "
      "(its local graphs would split into four disjoint 20-vertex cliques), "
      "so the ladder contradiction is unconditional"));
  res.ok = true;
  rep.verdict = Verdict::Infeasible;
  return res;
}

// ---------------------------------------------------------------------------
// Batch.
// ---------------------------------------------------------------------------

namespace {

std::string strip_line(const std::string& raw) {
  std::string s = raw;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && is_space(s[start])) ++start;
  return s.substr(start);
}

FeasibilityReport run_line_noexcept(const std::string& line, const CheckOptions& options) {
  try {
    return run_checks_on_line(line, options);
  } catch (...) {
    FeasibilityReport rep;
    rep.input = line;
    rep.checks.push_back(
        make_check("internal", CheckStatus::Fail, {}, "unexpected failure"));
    rep.verdict = Verdict::Error;
    return rep;
  }
}

}  // namespace

BatchResult batch_run_lines(const std::vector<std::string>& lines, const BatchOptions& options) {
  std::vector<std::string> work;
  for (const std::string& raw : lines) {
    std::string s = strip_line(raw);
    if (!s.empty()) work.push_back(std::move(s));
  }

  BatchResult out;
  out.reports.resize(work.size());
  for (Verdict v : {Verdict::NoObstruction, Verdict::Infeasible,
                    Verdict::InfeasibleIfGeometric, Verdict::Error})
    out.verdict_counts[to_string(v)] = 0;

  std::size_t workers = options.workers > 1 ? static_cast<std::size_t>(options.workers) : 1;
  workers = std::min(workers, std::max<std::size_t>(work.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i)
      out.reports[i] = run_line_noexcept(work[i], options.check);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= work.size()) return;
          out.reports[i] = run_line_noexcept(work[i], options.check);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& r : out.reports) ++out.verdict_counts[to_string(r.verdict)];
  return out;
}

BatchResult batch_run(const std::string& path, const BatchOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read batch file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return batch_run_lines(lines, options);
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

namespace {

void render_checks_text(std::string& out, const std::vector<CheckResult>& checks) {
  char buf[64];
  for (const auto& r : checks) {
    std::snprintf(buf, sizeof buf, "  %-22s %-15s ", r.id.c_str(), to_string(r.status));
    out += buf;
    out += r.message;
    out += '\n';
    for (const auto& [k, v] : r.witnesses) {
      out += "      ";
      out += k;
      out += " = ";
      out += v;
      out += '\n';
    }
  }
}

ordered_json value_to_json(const AlgebraicNumber& v) {
  if (v.is_rational()) return to_canonical(v.rational_value());
  ordered_json j;
  ordered_json coeffs = ordered_json::array();
  for (const Int& c : v.minimal_poly().coeff) coeffs.push_back(to_canonical(c));
  j["minpoly"] = std::move(coeffs);
  RatInterval e = v.enclosure();
  j["interval"] = {to_canonical(e.lo), to_canonical(e.hi)};
  return j;
}

ordered_json multiplicity_to_json(const Int& m) {
  // Certified multiplicities fit comfortably in 64 bits; fall back to the
  // canonical string on absurd inputs rather than overflowing.
  if (m >= std::numeric_limits<long long>::min() &&
      m <= std::numeric_limits<long long>::max())
    return m.convert_to<long long>();
  return to_canonical(m);
}

ordered_json report_to_json_obj(const FeasibilityReport& r) {
  ordered_json j;
  if (r.array) {
    ordered_json arr;
    ordered_json b = ordered_json::array(), c = ordered_json::array();
    for (const Int& x : r.array->b) b.push_back(to_canonical(x));
    for (const Int& x : r.array->c) c.push_back(to_canonical(x));
    arr["b"] = std::move(b);
    arr["c"] = std::move(c);
    j["array"] = std::move(arr);
  } else {
    j["array"] = nullptr;
    j["input"] = r.input;
  }
  j["n"] = r.derived ? ordered_json(to_canonical(r.derived->n)) : ordered_json(nullptr);
  if (r.spectrum) {
    ordered_json sp = ordered_json::array();
    for (const auto& e : r.spectrum->eigs) {
      ordered_json entry;
      entry["value"] = value_to_json(e.value);
      entry["multiplicity"] = multiplicity_to_json(e.multiplicity);
      sp.push_back(std::move(entry));
    }
    j["spectrum"] = std::move(sp);
  } else {
    j["spectrum"] = nullptr;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json row;
    row["id"] = c.id;
    row["status"] = to_string(c.status);
    row["witnesses"] = ordered_json::object();
    for (const auto& [k, v] : c.witnesses) row["witnesses"][k] = v;
    row["message"] = c.message;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  j["verdict"] = to_string(r.verdict);
  return j;
}

}  // namespace

std::string report_to_text(const FeasibilityReport& r) {
  std::string out;
  if (r.array) {
    out += "array:    " + render_array(*r.array) + "\n";
    if (r.derived) {
      out += "n:        " + to_canonical(r.derived->n) + "\n";
      out += "a:        (" + join_ints(r.derived->a, 1) + ")\n";
      out += "k_dist:   (" + join_rats(r.derived->k_dist, 1) + ")\n";
    }
  } else {
    out += "input:    " + r.input + "\n";
  }
  out += "spectrum: " +
         (r.spectrum ? spectrum_to_string(*r.spectrum) : std::string("(not certified)")) + "\n";
  out += "checks:\n";
  render_checks_text(out, r.checks);
  out += "verdict:  ";
  out += to_string(r.verdict);
  out += '\n';
  return out;
}

std::string report_to_json(const FeasibilityReport& r) {
  return report_to_json_obj(r).dump(2) + "\n";
}

std::string replay_to_text(const ReplayResult& r) {
  std::string out = "replaying the bundled non-existence chain for {80,54,12;1,6,60}\n\n";
  char buf[64];
  for (const auto& s : r.steps) {
    std::snprintf(buf, sizeof buf, "step %2d  %-8s %-24s ", s.number,
                  s.ok ? "ok" : "MISMATCH", s.title.c_str());
    out += buf;
    out += s.actual;
    if (!s.ok) out += "   (expected: " + s.expected + ")";
    out += '\n';
  }
  out += '\n';
  if (r.ok) {
    out += "all 10 steps match their pinned values\n";
  } else {
    out += "ABORT: " + r.diagnostic + "\n";
  }
  out += "verdict:  ";
  out += to_string(r.report.verdict);
  out += '\n';
  return out;
}

std::string replay_to_json(const ReplayResult& r) {
  ordered_json j;
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) {
    ordered_json step;
    step["step"] = s.number;
    step["title"] = s.title;
    step["expected"] = s.expected;
    step["actual"] = s.actual;
    step["ok"] = s.ok;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["ok"] = r.ok;
  j["diagnostic"] = r.ok ? ordered_json(nullptr) : ordered_json(r.diagnostic);
  j["report"] = report_to_json_obj(r.report);
  return j.dump(2) + "\n";
}

std::string batch_to_text(const BatchResult& r) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    const auto& rep = r.reports[i];
    std::snprintf(buf, sizeof buf, "%4zu  ", i + 1);
    out += buf;
    std::snprintf(buf, sizeof buf, "%-24s ", to_string(rep.verdict));
    out += buf;
    out += rep.array ? render_array(*rep.array) : rep.input;
    out += '\n';
  }
  out += "summary:";
  for (const auto& [name, count] : r.verdict_counts)
    out += " " + name + "=" + std::to_string(count);
  out += " total=" + std::to_string(r.reports.size());
  out += '\n';
  return out;
}

std::string batch_to_json(const BatchResult& r) {
  ordered_json j;
  ordered_json reports = ordered_json::array();
  for (const auto& rep : r.reports) reports.push_back(report_to_json_obj(rep));
  j["reports"] = std::move(reports);
  ordered_json summary;
  for (const auto& [name, count] : r.verdict_counts) summary[name] = count;
  summary["total"] = r.reports.size();
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

}  // namespace drg
