#include "drg/geometric.hpp"

#include <utility>

namespace drg {

namespace {

std::string csv(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_canonical(v[i]);
  }
  return out;
}

}  // namespace

GeometricOutcome solve_geometric_parameters(const DerivedParameters& d,
                                            const AlgebraicNumber& theta_min) {
  if (!theta_min.is_rational()) {
    return NotGeometric{"irrational smallest eigenvalue", 0,
                        "theta_D = " + theta_min.to_string()};
  }
  const Rat& th = theta_min.rational_value();
  Rat zeta_rat = Rat(1) - Rat(d.k) / th;
  if (!is_integer(th) || th >= 0 || !is_integer(zeta_rat) || zeta_rat < 2) {
    return NotGeometric{"clique size non-integral", 0,
                        "zeta = 1 - k/theta_D = 1 - " + to_canonical(d.k) + "/(" +
                            to_canonical(th) + ") = " + to_canonical(zeta_rat)};
  }
  Int theta = num(th);
  Int zeta = num(zeta_rat);
  std::size_t D = d.diameter();

  std::vector<Int> tau;
  std::vector<Int> psi;
  psi.push_back(Int(1));           // psi_0
  tau.push_back(d.array.c_at(1));  // tau_1 = c_1 / psi_0

  for (std::size_t i = 1; i < D; ++i) {
    Int denom = -theta - tau[i - 1];
    if (denom == 0) {
      return NotGeometric{"degenerate: tau_i = -theta_D", i,
                          "tau_" + std::to_string(i) + " = " + to_canonical(tau[i - 1]) +
                              " = -theta_D"};
    }
    Rat psi_rat = Rat(zeta) - Rat(d.array.b_at(i)) / Rat(denom);
    std::string psi_eq = "psi_" + std::to_string(i) + " = zeta - b_" + std::to_string(i) +
                         "/(-theta_D - tau_" + std::to_string(i) + ") = " + to_canonical(zeta) +
                         " - " + to_canonical(d.array.b_at(i)) + "/" + to_canonical(denom) +
                         " = " + to_canonical(psi_rat);
    if (!is_integer(psi_rat)) {
      return NotGeometric{"ladder_integrality", i, psi_eq};
    }
    Int psi_i = num(psi_rat);
    if (psi_i < 1 || psi_i > zeta - 1) {
      return NotGeometric{"ladder_range", i,
                          psi_eq + " outside [1, " + to_canonical(zeta - 1) + "]"};
    }
    psi.push_back(psi_i);

    Rat tau_rat = Rat(d.array.c_at(i + 1)) / Rat(psi_i);
    std::string tau_eq = "tau_" + std::to_string(i + 1) + " = c_" + std::to_string(i + 1) +
                         "/psi_" + std::to_string(i) + " = " + to_canonical(d.array.c_at(i + 1)) +
                         "/" + to_canonical(psi_i) + " = " + to_canonical(tau_rat);
    if (!is_integer(tau_rat)) {
      return NotGeometric{"ladder_integrality", i + 1, tau_eq};
    }
    Int tau_i = num(tau_rat);
    if (tau_i < 1) {
      return NotGeometric{"ladder_range", i + 1, tau_eq + " below 1"};
    }
    tau.push_back(tau_i);
  }
  return GeometricParameters{theta, zeta, std::move(tau), std::move(psi)};
}

IntersectionArray reconstruct_intersection_array(const GeometricParameters& g) {
  std::size_t D = g.tau.size();
  IntersectionArray arr;
  arr.b.push_back(-g.theta_min * (g.zeta - 1));  // b_0 = k
  for (std::size_t i = 1; i < D; ++i) {
    arr.b.push_back(-(g.theta_min + g.tau[i - 1]) * (g.zeta - g.psi[i]));
  }
  for (std::size_t i = 1; i <= D; ++i) {
    arr.c.push_back(g.tau[i - 1] * g.psi[i - 1]);
  }
  return arr;
}

CheckResult geometric_solve_check(const GeometricOutcome& outcome) {
  if (const auto* ng = std::get_if<NotGeometric>(&outcome)) {
    return make_check("geom_solve", CheckStatus::NotApplicable,
                      {{"reason", ng->reason},
                       {"index", std::to_string(ng->index)},
                       {"equation", ng->equation}},
                      "no clique geometry exists: " + ng->reason);
  }
  const auto& g = std::get<GeometricParameters>(outcome);
  return make_check("geom_solve", CheckStatus::Pass,
                    {{"theta_D", to_canonical(g.theta_min)},
                     {"zeta", to_canonical(g.zeta)},
                     {"tau", csv(g.tau)},
                     {"psi", csv(g.psi)}},
                    "clique geometry solves with clique size " + to_canonical(g.zeta) +
                        ", tau = (" + csv(g.tau) + "), psi = (" + csv(g.psi) + ")");
}

CheckResult koolen_bang_check(const GeometricParameters& params, const Int& c_2) {
  if (params.tau.size() < 2) {
    return make_check("geom_kb", CheckStatus::NotApplicable, {},
                      "tau_2/psi_1 need diameter >= 2");
  }
  if (c_2 < 2) {
    return make_check("geom_kb", CheckStatus::NotApplicable, {{"c_2", to_canonical(c_2)}},
                      "the tau_2 >= psi_1 inequality needs c_2 >= 2");
  }
  const Int& tau2 = params.tau[1];
  const Int& psi1 = params.psi[1];
  bool ok = tau2 >= psi1;
  return make_check(
      "geom_kb", ok ? CheckStatus::Pass : CheckStatus::Fail,
      {{"tau_2", to_canonical(tau2)}, {"psi_1", to_canonical(psi1)}, {"c_2", to_canonical(c_2)}},
      ok ? "tau_2 = " + to_canonical(tau2) + " >= psi_1 = " + to_canonical(psi1) +
               ": no obstruction"
         : "a geometric graph would need tau_2 >= psi_1, but " + to_canonical(tau2) + " < " +
               to_canonical(psi1) + ": impossible");
}

CheckResult koolen_bang_check(const GeometricOutcome& outcome, const Int& c_2) {
  if (const auto* ng = std::get_if<NotGeometric>(&outcome)) {
    return make_check("geom_kb", CheckStatus::NotApplicable, {{"reason", ng->reason}},
                      "ladder unsolved (" + ng->reason + "): inequality not applicable");
  }
  return koolen_bang_check(std::get<GeometricParameters>(outcome), c_2);
}

}  // namespace drg
