#pragma once

// The reporting currency of every feasibility test.  A check never throws on
// a mathematical outcome: impossibility, slack, equality, inapplicability and
// unresolvable-within-budget are all statuses.  Exceptions are reserved for
// contract violations (bad arguments, unreadable files).

#include <map>
#include <string>

namespace drg {

enum class CheckStatus {
  Pass,           // constraint satisfied with slack
  Fail,           // constraint violated: the tested configuration is impossible
  Equality,       // constraint met exactly; satisfied, but structurally rigid
  NotApplicable,  // hypothesis of the check not met by this array
  Inconclusive,   // could not be resolved within the precision budget
};

enum class Verdict {
  NoObstruction,          // every applicable check passed
  Infeasible,             // an unconditional obstruction was found
  InfeasibleIfGeometric,  // only the geometric-hypothesis checks failed
  Error,                  // input could not be parsed / processed
};

const char* to_string(CheckStatus s);
const char* to_string(Verdict v);

struct CheckResult {
  std::string id;      // stable machine-readable identifier, e.g. "claw_local"
  CheckStatus status = CheckStatus::NotApplicable;
  // Exact values backing the status, canonically rendered (never floats).
  std::map<std::string, std::string> witnesses;
  std::string message;  // one human-readable line
};

inline CheckResult make_check(std::string id, CheckStatus status,
                              std::map<std::string, std::string> witnesses,
                              std::string message) {
  return CheckResult{std::move(id), status, std::move(witnesses), std::move(message)};
}

}  // namespace drg
