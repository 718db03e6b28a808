#include "drg/check.hpp"

namespace drg {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Equality: return "EQUALITY";
    case CheckStatus::NotApplicable: return "NOT_APPLICABLE";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NoObstruction: return "NO_OBSTRUCTION";
    case Verdict::Infeasible: return "INFEASIBLE";
    case Verdict::InfeasibleIfGeometric: return "INFEASIBLE_IF_GEOMETRIC";
    case Verdict::Error: return "ERROR";
  }
  return "?";
}

}  // namespace drg
