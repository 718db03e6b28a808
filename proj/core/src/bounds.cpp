#include "drg/bounds.hpp"

#include <stdexcept>
#include <utility>

#include "drg/polynomial.hpp"

namespace drg {

namespace {

// ceil(k / (a1 + 1)): a coclique of this size exists in every a1-regular
// graph on k vertices (greedy removal of closed neighbourhoods).
Int forced_coclique_size(const Int& k, const Int& a1) { return (k + a1) / (a1 + 1); }

std::string claw_message(CheckStatus st, const Int& s, const Rat& lhs, const Int& c,
                         const std::string& where) {
  switch (st) {
    case CheckStatus::Fail:
      return "no size-" + to_canonical(s) + " coclique" + where +
             ": it would force average pairwise common-neighbour count " + to_canonical(lhs) +
             " > " + to_canonical(c);
    case CheckStatus::Equality:
      return "a size-" + to_canonical(s) + " coclique" + where +
             " is extremal: every pair has exactly " + to_canonical(c) + " common neighbours";
    default:
      return "a size-" + to_canonical(s) + " coclique" + where +
             " is unobstructed: forced average " + to_canonical(lhs) + " < " + to_canonical(c);
  }
}

}  // namespace

CliqueBound delsarte_clique_bound(const Int& k, const AlgebraicNumber& theta_min) {
  if (theta_min.compare(Rat(-1)) >= 0) {
    throw std::domain_error(
        "clique bound needs smallest eigenvalue < -1; got " + theta_min.to_string());
  }
  AlgebraicNumber bound = theta_min.mobius(Rat(1), Rat(-k), Rat(0));  // 1 - k/x
  Int fl = bound.floor();
  return CliqueBound{std::move(bound), fl, fl - 1};
}

CheckResult delsarte_clique_check(const Spectrum& spectrum) {
  const AlgebraicNumber& th = spectrum.theta_min();
  if (th.compare(Rat(-1)) >= 0) {
    return make_check("delsarte_clique", CheckStatus::NotApplicable,
                      {{"theta_min", th.to_string()}},
                      "smallest eigenvalue >= -1 (complete graph): clique bound vacuous");
  }
  CliqueBound cb = delsarte_clique_bound(spectrum.k, th);
  return make_check("delsarte_clique", CheckStatus::Pass,
                    {{"bound", cb.bound.to_string()},
                     {"floor", to_canonical(cb.floor_value)},
                     {"local_floor", to_canonical(cb.local_floor)}},
                    "cliques have at most " + to_canonical(cb.floor_value) +
                        " vertices; cliques in a local graph at most " +
                        to_canonical(cb.local_floor));
}

namespace {

// Exact claw comparison: L = ((k+1)s - n)/C(s,2) against c, decided by the
// integer comparison 2((k+1)s - n) vs c*s*(s-1).
std::pair<CheckStatus, Rat> claw_core(const Int& n, const Int& k, const Int& c, const Int& s) {
  if (s < 2) throw std::domain_error("claw bound needs s >= 2");
  Int num2 = 2 * ((k + 1) * s - n);
  Int den2 = s * (s - 1);  // 2 C(s,2) > 0
  Rat lhs = Rat(num2) / Rat(den2);
  Int rhs2 = c * den2;
  CheckStatus st = num2 < rhs2    ? CheckStatus::Pass
                   : num2 == rhs2 ? CheckStatus::Equality
                                  : CheckStatus::Fail;
  return {st, lhs};
}

}  // namespace

CheckResult claw_bound(const Int& n, const Int& k, const Int& c, const Int& s) {
  auto [st, lhs] = claw_core(n, k, c, s);
  return make_check("claw_global", st,
                    {{"n", to_canonical(n)},
                     {"k", to_canonical(k)},
                     {"c", to_canonical(c)},
                     {"s", to_canonical(s)},
                     {"lhs", to_canonical(lhs)}},
                    claw_message(st, s, lhs, c, ""));
}

CheckResult local_claw_bound(const DerivedParameters& d, const Int& s) {
  if (d.diameter() < 2) {
    return make_check("claw_local", CheckStatus::NotApplicable, {},
                      "local claw bound needs diameter >= 2 (no c_2)");
  }
  Int c = d.array.c_at(2) - 1;
  auto [st, lhs] = claw_core(d.k, d.a[1], c, s);
  return make_check("claw_local", st,
                    {{"s", to_canonical(s)},
                     {"lhs", to_canonical(lhs)},
                     {"c_minus_1", to_canonical(c)}},
                    claw_message(st, s, lhs, c, " in a local graph"));
}

ClawScanResult local_claw_scan(const DerivedParameters& d, const Int& max_s) {
  ClawScanResult out;
  if (d.diameter() < 2) {
    out.rows.push_back(local_claw_bound(d, 2));
    return out;
  }
  Int a1 = d.a[1];
  Int limit = max_s > 0 ? max_s : a1 + 2;
  Int forced = forced_coclique_size(d.k, a1);
  for (Int s = 2; s <= limit; ++s) {
    CheckResult row = local_claw_bound(d, s);
    if (row.status == CheckStatus::Equality) {
      out.rows.push_back(std::move(row));
    } else if (row.status == CheckStatus::Fail) {
      if (s <= forced) {
        out.unconditional_fail = true;
        row.witnesses["forced_coclique_size"] = to_canonical(forced);
        row.message += "; a coclique of size " + to_canonical(s) +
                       " must exist (ceil(k/(a_1+1)) = " + to_canonical(forced) +
                       "), so the array is infeasible";
      }
      out.rows.push_back(std::move(row));
      break;
    }
  }
  if (out.rows.empty()) {
    out.rows.push_back(make_check(
        "claw_local", CheckStatus::Pass,
        {{"s_max", to_canonical(limit)}, {"c_minus_1", to_canonical(d.array.c_at(2) - 1)}},
        "no local coclique-size obstruction for 2 <= s <= " + to_canonical(limit)));
  }
  return out;
}

Int coclique_mu_sum_lower_bound(const Int& n, const Int& k, const Int& s) {
  Int raw = s * (k + 1) - n;
  return raw > 0 ? raw : Int(0);
}

CheckResult mu_sum_check(const Int& n, const Int& k, const Int& s) {
  Int bound = coclique_mu_sum_lower_bound(n, k, s);
  return make_check("mu_sum", CheckStatus::Pass,
                    {{"n", to_canonical(n)},
                     {"k", to_canonical(k)},
                     {"s", to_canonical(s)},
                     {"bound", to_canonical(bound)}},
                    "any " + to_canonical(s) +
                        "-coclique carries total pairwise common-neighbour count >= " +
                        to_canonical(bound));
}

AlgebraicNumber local_min_eigenvalue_bound(const AlgebraicNumber& theta_1, const Int& b_1) {
  if (theta_1.compare(Rat(-1)) <= 0) {
    throw std::domain_error(
        "local eigenvalue bound needs theta_1 > -1; got " + theta_1.to_string());
  }
  return theta_1.mobius(Rat(-1), Rat(-b_1), Rat(1));  // -1 - b_1/(x + 1)
}

CheckResult local_min_eig_check(const DerivedParameters& d, const Spectrum& spectrum) {
  if (d.diameter() < 2) {
    return make_check("local_min_eig", CheckStatus::NotApplicable, {},
                      "local eigenvalue bound needs diameter >= 2 (no b_1)");
  }
  const AlgebraicNumber& th1 = spectrum.theta_second();
  if (th1.compare(Rat(-1)) <= 0) {
    return make_check("local_min_eig", CheckStatus::NotApplicable,
                      {{"theta_1", th1.to_string()}},
                      "second eigenvalue <= -1: bound undefined");
  }
  AlgebraicNumber bound = local_min_eigenvalue_bound(th1, d.array.b_at(1));
  return make_check("local_min_eig", CheckStatus::Pass,
                    {{"theta_1", th1.to_string()}, {"bound", bound.to_string()}},
                    "every local graph has smallest eigenvalue >= " + bound.to_string());
}

CheckResult clique_intersection_interlacing(const Int& v1, const Int& v2, const Int& m,
                                            const AlgebraicNumber& threshold) {
  if (m < 1 || v1 <= m || v2 <= m) {
    throw std::domain_error("degenerate clique-intersection partition (need v1, v2 > m >= 1)");
  }
  Rat q11(m - 1);
  Rat q12(v1 + v2 - 2 * m);
  Rat q21(m);
  Rat q22 = Rat((v1 - m) * (v1 - m - 1) + (v2 - m) * (v2 - m - 1)) / q12;
  Rat t = q11 + q22;
  Rat det = q11 * q22 - q12 * q21;
  // p(x) = x^2 - t x + det, the characteristic polynomial of Q (monic, so the
  // primitive integer rescaling below preserves signs).
  RatPoly p{std::vector<Rat>{det, -t, Rat(1)}};
  int p_sign;
  if (threshold.is_rational()) {
    Rat v = p.eval(threshold.rational_value());
    p_sign = v > 0 ? 1 : v < 0 ? -1 : 0;
  } else {
    p_sign = threshold.sign_at(p.to_primitive_int());
  }
  int half_cmp = threshold.compare(t / 2);  // sign of (T - t/2)
  CheckStatus st;
  if (p_sign < 0 || (p_sign >= 0 && half_cmp > 0)) {
    st = CheckStatus::Fail;  // lambda_min(Q) < T: configuration impossible
  } else if (p_sign == 0 && half_cmp <= 0) {
    st = CheckStatus::Equality;  // lambda_min(Q) = T exactly
  } else {
    st = CheckStatus::Pass;
  }
  std::string msg;
  if (st == CheckStatus::Fail) {
    msg = "cliques of sizes " + to_canonical(v1) + " and " + to_canonical(v2) + " sharing " +
          to_canonical(m) + " vertices force a quotient eigenvalue below " +
          threshold.to_string() + ": impossible";
  } else if (st == CheckStatus::Equality) {
    msg = "quotient spectrum touches the threshold " + threshold.to_string() + " exactly";
  } else {
    msg = "quotient spectrum stays >= " + threshold.to_string() + ": no obstruction";
  }
  return make_check("interlace_pair", st,
                    {{"v1", to_canonical(v1)},
                     {"v2", to_canonical(v2)},
                     {"m", to_canonical(m)},
                     {"trace", to_canonical(t)},
                     {"det", to_canonical(det)},
                     {"p_sign", std::to_string(p_sign)}},
                    msg);
}

QuotientScanResult quotient_scan(const Int& m, const Int& v_lo, const Int& v_hi,
                                 const AlgebraicNumber& threshold) {
  QuotientScanResult out;
  if (v_hi < v_lo) {
    out.summary = make_check("interlace_scan", CheckStatus::NotApplicable,
                             {{"m", to_canonical(m)}, {"pairs", "0"}}, "empty scan range");
    return out;
  }
  if (m < 1 || v_lo <= m) {
    throw std::domain_error("quotient scan needs v_lo > m >= 1");
  }
  Int fails = 0;
  for (Int v1 = v_lo; v1 <= v_hi; ++v1) {
    for (Int v2 = v1; v2 <= v_hi; ++v2) {
      out.pairs.push_back(clique_intersection_interlacing(v1, v2, m, threshold));
      if (out.pairs.back().status == CheckStatus::Fail) ++fails;
    }
  }
  Int total(static_cast<long long>(out.pairs.size()));
  CheckStatus st = (fails == total) ? CheckStatus::Fail : CheckStatus::Pass;
  std::string msg =
      (st == CheckStatus::Fail)
          ? "all " + to_canonical(total) + " clique-intersection configurations (" +
                to_canonical(v_lo) + " <= v1 <= v2 <= " + to_canonical(v_hi) + ", sharing " +
                to_canonical(m) + " vertices) are excluded below " + threshold.to_string()
          : to_canonical(total - fails) + " of " + to_canonical(total) +
                " clique-intersection configurations survive the threshold " +
                threshold.to_string();
  out.summary = make_check("interlace_scan", st,
                           {{"m", to_canonical(m)},
                            {"v_lo", to_canonical(v_lo)},
                            {"v_hi", to_canonical(v_hi)},
                            {"threshold", threshold.to_string()},
                            {"pairs", to_canonical(total)},
                            {"fails", to_canonical(fails)}},
                           msg);
  return out;
}

Int equality_case_nonneighbor_count(const Int& n, const Int& k, const Int& c, const Int& s) {
  return n - s * (k + 1) + (s * (s - 1) / 2) * c;
}

CheckResult eq_case_count_check(const Int& n, const Int& k, const Int& c, const Int& s) {
  if (s < 1) throw std::domain_error("equality-case count needs s >= 1");
  Int count = equality_case_nonneighbor_count(n, k, c, s);
  CheckStatus st = count >= 0 ? CheckStatus::Pass : CheckStatus::Fail;
  return make_check(
      "eq_case_count", st,
      {{"n", to_canonical(n)},
       {"k", to_canonical(k)},
       {"c", to_canonical(c)},
       {"s", to_canonical(s)},
       {"count", to_canonical(count)}},
      st == CheckStatus::Pass
          ? "exactly " + to_canonical(count) + " vertices are non-adjacent to all " +
                to_canonical(s) + " chosen coclique vertices"
          : "negative non-neighbour count " + to_canonical(count) +
                ": the equality-case assumptions are contradictory");
}

}  // namespace drg
