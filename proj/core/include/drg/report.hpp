#pragma once

// The composed feasibility pipeline, the hard-wired worked example replay,
// batch evaluation, and deterministic text/JSON rendering.  This is the layer
// the command-line tool is a thin shell around.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drg/array.hpp"
#include "drg/check.hpp"
#include "drg/rational.hpp"
#include "drg/spectrum.hpp"

namespace drg {

struct CheckOptions {
  Int max_s = Int(0);        // claw-scan limit; <= 0 selects the default a_1 + 2
  int precision_bits = 512;  // multiplicity certification budget
};

struct FeasibilityReport {
  std::string input;                         // the text that was checked
  std::optional<IntersectionArray> array;    // absent on parse error
  std::optional<DerivedParameters> derived;  // absent on parse error
  std::optional<Spectrum> spectrum;          // absent when not certified
  std::vector<CheckResult> checks;           // in execution order
  Verdict verdict = Verdict::Error;
};

// Executes, in order: basic feasibility -> spectrum with multiplicity
// certification -> clique bound -> local eigenvalue floor -> local claw scan
// -> clique-ladder solve + consistency.  A basic or multiplicity FAIL stops
// the pipeline (later checks would divide by the very quantities that
// failed).  Verdict:
//   INFEASIBLE               some unconditional check FAILed (basic,
//                            multiplicity integrality, or a claw FAIL at a
//                            coclique size that must exist),
//   INFEASIBLE_IF_GEOMETRIC  only the clique-ladder consistency check FAILed,
//   NO_OBSTRUCTION           otherwise.
// A claw FAIL above the forced coclique size only caps coclique sizes and
// does not flip the verdict; a non-geometric ladder outcome is recorded
// NOT_APPLICABLE (plenty of graphs are not geometric).
FeasibilityReport run_all_checks(const IntersectionArray& arr,
                                 const CheckOptions& options = {});

// parse + run_all_checks; parse failures yield a single FAIL row (id "parse")
// and verdict ERROR instead of throwing.
FeasibilityReport run_checks_on_line(const std::string& line,
                                     const CheckOptions& options = {});

// ---------------------------------------------------------------------------
// Worked example: {80,54,12;1,6,60} is infeasible.
// ---------------------------------------------------------------------------

struct ReplayStep {
  int number = 0;        // 1-based
  std::string title;     // stable step name
  std::string expected;  // pinned value, canonical text
  std::string actual;    // recomputed value, same rendering
  bool ok = false;       // expected == actual
};

struct ReplayOptions {
  // Test hook: replace the pinned expected value of a step (keyed by step
  // number) to exercise the abort path.
  std::map<int, std::string> expected_override;
};

struct ReplayResult {
  std::vector<ReplayStep> steps;  // stops after the first mismatch
  bool ok = false;                // all 10 steps matched
  std::string diagnostic;         // names the failed step; empty when ok
  FeasibilityReport report;       // full witness ledger; on success the
                                  // verdict is INFEASIBLE (see below)
};

// Recomputes the ten-step infeasibility chain for {80,54,12;1,6,60} and
// asserts every value against its pinned form:
//   (1) n=945 a=(25,62,20) k=(80,720,144)     (6) N(2)=33 N(3)=17 N(4)=6
//   (2) 80^1 26^80 5^144 -4^720               (7) 55/55 FAIL  (m=5, 11..20)
//   (3) bound=21 local=20                     (8) 24          (mu mass, s=4)
//   (4) -3                                    (9) zeta=21 tau=(1,2,4) psi=(1,3,15)
//   (5) s=5 EQUALITY; s=6 FAIL lhs=76/15     (10) tau_2=2 < psi_1=3: FAIL
// Any deviation aborts with a diagnostic naming the step.  On success the
// verdict is upgraded from INFEASIBLE_IF_GEOMETRIC to INFEASIBLE through a
// certified premise, recorded as its own ledger row (id "geometric_premise"):
// a graph realizing this array would necessarily be geometric, so the ladder
// contradiction kills it outright.
ReplayResult replay_paper(const ReplayOptions& options = {});

// ---------------------------------------------------------------------------
// Batch evaluation.
// ---------------------------------------------------------------------------

struct BatchOptions {
  CheckOptions check;
  int workers = 1;  // > 1 enables parallel evaluation; output order is fixed
};

struct BatchResult {
  std::vector<FeasibilityReport> reports;      // input order
  std::map<std::string, int> verdict_counts;   // verdict name -> count
};

// One array per line; '#' starts a comment; blank lines skipped.  Per-line
// failures become per-line ERROR reports and never abort the batch.
BatchResult batch_run_lines(const std::vector<std::string>& lines,
                            const BatchOptions& options = {});

// Reads `path` and evaluates it as above.  Throws std::runtime_error when
// the file cannot be read.
BatchResult batch_run(const std::string& path, const BatchOptions& options = {});

// ---------------------------------------------------------------------------
// Rendering.  Both forms are deterministic: fixed key order, canonical
// rational strings, no floats anywhere.
// ---------------------------------------------------------------------------

std::string report_to_text(const FeasibilityReport& r);
std::string report_to_json(const FeasibilityReport& r);

std::string replay_to_text(const ReplayResult& r);
std::string replay_to_json(const ReplayResult& r);

std::string batch_to_text(const BatchResult& r);
std::string batch_to_json(const BatchResult& r);

}  // namespace drg
