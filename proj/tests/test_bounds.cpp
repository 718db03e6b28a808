// Inequality battery: clique bound, claw bounds and scan, mu-mass bound,
// local minimum-eigenvalue bound, quotient-matrix interlacing, and
// equality-case counts.  Pins use the {80,54,12;1,6,60} numbers throughout.

#include "doctest.h"

#include "drg/array.hpp"
#include "drg/bounds.hpp"
#include "drg/spectrum.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace drg;

namespace {

DerivedParameters derived(const std::string& text) {
  return derive_parameters(parse_array(text));
}

IntPoly ip(std::vector<long long> ascending) {
  std::vector<Int> c;
  for (long long x : ascending) c.emplace_back(x);
  return IntPoly{std::move(c)};
}

Spectrum spectrum_of(const std::string& text) {
  auto out = compute_spectrum(derived(text));
  REQUIRE(out.spectrum.has_value());
  return *out.spectrum;
}

}  // namespace

TEST_CASE("delsarte clique bound at the pinned parameters") {
  CliqueBound cb = delsarte_clique_bound(Int(80), AlgebraicNumber(Rat(-4)));
  CHECK(cb.bound.rational_value() == Rat(21));
  CHECK(cb.floor_value == 21);
  CHECK(cb.local_floor == 20);

  CHECK_THROWS_AS(delsarte_clique_bound(Int(5), AlgebraicNumber(Rat(-1))),
                  std::domain_error);
  CHECK_THROWS_AS(delsarte_clique_bound(Int(5), AlgebraicNumber(Rat(-1, 2))),
                  std::domain_error);

  // pentagon: theta_min = (-1-sqrt(5))/2, bound = sqrt(5), floor 2
  CheckResult pent = delsarte_clique_check(spectrum_of("{2,1;1,1}"));
  CHECK(pent.status == CheckStatus::Pass);
  CHECK(pent.witnesses.at("floor") == "2");
  CHECK(pent.witnesses.at("local_floor") == "1");

  // complete graph: theta_min = -1, bound vacuous
  CheckResult comp = delsarte_clique_check(spectrum_of("{4;1}"));
  CHECK(comp.status == CheckStatus::NotApplicable);
  CHECK(comp.witnesses.at("theta_min") == "-1");
}

TEST_CASE("claw bound: the three regimes at the pinned local parameters") {
  // local graph of the pinned array: 80 vertices, 25-regular, mu cap 5
  CheckResult pass = claw_bound(Int(80), Int(25), Int(5), Int(4));
  CHECK(pass.status == CheckStatus::Pass);
  CHECK(pass.witnesses.at("lhs") == "4");

  CheckResult eq = claw_bound(Int(80), Int(25), Int(5), Int(5));
  CHECK(eq.status == CheckStatus::Equality);
  CHECK(eq.witnesses.at("lhs") == "5");

  CheckResult fail = claw_bound(Int(80), Int(25), Int(5), Int(6));
  CHECK(fail.status == CheckStatus::Fail);
  CHECK(fail.witnesses.at("lhs") == "76/15");

  CHECK_THROWS_AS(claw_bound(Int(10), Int(3), Int(1), Int(1)), std::domain_error);
}

TEST_CASE("claw bound status agrees with direct rational comparison") {
  std::mt19937 rng(20260817);
  std::uniform_int_distribution<long long> pick_k(1, 100), pick_c(0, 20), pick_s(2, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    long long k = pick_k(rng);
    long long c = pick_c(rng);
    long long s = pick_s(rng);
    std::uniform_int_distribution<long long> pick_n(k + 1, 300);
    long long n = pick_n(rng);

    CheckResult row = claw_bound(Int(n), Int(k), Int(c), Int(s));
    Rat lhs = Rat((k + 1) * s - n) / Rat(s * (s - 1) / 2);
    CheckStatus expect = lhs < Rat(c)    ? CheckStatus::Pass
                         : lhs == Rat(c) ? CheckStatus::Equality
                                         : CheckStatus::Fail;
    CHECK(row.status == expect);
    CHECK(row.witnesses.at("lhs") == to_canonical(lhs));
  }
}

TEST_CASE("local claw bound and scan on the pinned array") {
  auto d = derived("{80,54,12;1,6,60}");

  CheckResult s5 = local_claw_bound(d, Int(5));
  CHECK(s5.status == CheckStatus::Equality);
  CHECK(s5.witnesses.at("s") == "5");
  CHECK(s5.witnesses.at("lhs") == "5");
  CHECK(s5.witnesses.at("c_minus_1") == "5");

  CheckResult s6 = local_claw_bound(d, Int(6));
  CHECK(s6.status == CheckStatus::Fail);
  CHECK(s6.witnesses.at("lhs") == "76/15");

  ClawScanResult scan = local_claw_scan(d);
  REQUIRE(scan.rows.size() == 2);
  CHECK(scan.rows[0].status == CheckStatus::Equality);
  CHECK(scan.rows[0].witnesses.at("s") == "5");
  CHECK(scan.rows[1].status == CheckStatus::Fail);
  CHECK(scan.rows[1].witnesses.at("s") == "6");
  // ceil(80/26) = 4 < 6: the failure only caps coclique sizes, it does not
  // refute the array outright
  CHECK(!scan.unconditional_fail);
  CHECK(scan.rows[1].witnesses.count("forced_coclique_size") == 0);
}

TEST_CASE("claw scan failing at the forced coclique size is unconditional") {
  // {5,3;1,1}: local graphs are 1-regular on 5 vertices, so a 3-coclique is
  // forced, but with mu cap 0 even s = 3 is impossible.
  auto d = derived("{5,3;1,1}");
  ClawScanResult scan = local_claw_scan(d);
  REQUIRE(scan.rows.size() == 1);
  CHECK(scan.rows[0].status == CheckStatus::Fail);
  CHECK(scan.rows[0].witnesses.at("s") == "3");
  CHECK(scan.rows[0].witnesses.at("lhs") == "1/3");
  CHECK(scan.rows[0].witnesses.at("forced_coclique_size") == "3");
  CHECK(scan.unconditional_fail);
}

TEST_CASE("claw scan edge cases") {
  // diameter < 2: single NOT_APPLICABLE row
  ClawScanResult k5 = local_claw_scan(derived("{4;1}"));
  REQUIRE(k5.rows.size() == 1);
  CHECK(k5.rows[0].status == CheckStatus::NotApplicable);
  CHECK(!k5.unconditional_fail);

  // nothing found: single summary PASS row
  ClawScanResult pet = local_claw_scan(derived("{3,2;1,1}"));
  REQUIRE(pet.rows.size() == 1);
  CHECK(pet.rows[0].status == CheckStatus::Pass);
  CHECK(pet.rows[0].witnesses.at("s_max") == "2");
  CHECK(!pet.unconditional_fail);

  // explicit max_s extends the scan past the default
  ClawScanResult deep = local_claw_scan(derived("{80,54,12;1,6,60}"), Int(100));
  REQUIRE(deep.rows.size() == 2);  // still stops at the first FAIL (s = 6)
  CHECK(deep.rows[1].witnesses.at("s") == "6");
}

TEST_CASE("coclique mu mass lower bound") {
  CHECK(coclique_mu_sum_lower_bound(Int(80), Int(25), Int(4)) == 24);
  CHECK(coclique_mu_sum_lower_bound(Int(80), Int(25), Int(3)) == 0);  // 78 - 80 < 0
  CHECK(coclique_mu_sum_lower_bound(Int(10), Int(2), Int(3)) == 0);

  CheckResult row = mu_sum_check(Int(80), Int(25), Int(4));
  CHECK(row.status == CheckStatus::Pass);
  CHECK(row.witnesses.at("bound") == "24");
}

TEST_CASE("local minimum-eigenvalue bound") {
  AlgebraicNumber b = local_min_eigenvalue_bound(AlgebraicNumber(Rat(26)), Int(54));
  CHECK(b.is_rational());
  CHECK(b.rational_value() == Rat(-3));

  CHECK_THROWS_AS(local_min_eigenvalue_bound(AlgebraicNumber(Rat(-1)), Int(5)),
                  std::domain_error);
  CHECK_THROWS_AS(local_min_eigenvalue_bound(AlgebraicNumber(Rat(-2)), Int(5)),
                  std::domain_error);

  auto d = derived("{80,54,12;1,6,60}");
  CheckResult row = local_min_eig_check(d, spectrum_of("{80,54,12;1,6,60}"));
  CHECK(row.status == CheckStatus::Pass);
  CHECK(row.witnesses.at("theta_1") == "26");
  CHECK(row.witnesses.at("bound") == "-3");

  // diameter < 2: bound undefined
  CheckResult k5 = local_min_eig_check(derived("{4;1}"), spectrum_of("{4;1}"));
  CHECK(k5.status == CheckStatus::NotApplicable);
}

TEST_CASE("clique-intersection interlacing: exact threshold trichotomy") {
  // two triangles sharing one vertex: Q = [[0,2],[1,0]], lambda_min = -sqrt(2)
  AlgebraicNumber neg_sqrt2 =
      AlgebraicNumber::make_root(ip({-2, 0, 1}), Rat(-2), Rat(-1));

  CheckResult eq = clique_intersection_interlacing(Int(2), Int(2), Int(1), neg_sqrt2);
  CHECK(eq.status == CheckStatus::Equality);

  CheckResult pass = clique_intersection_interlacing(Int(2), Int(2), Int(1),
                                                     AlgebraicNumber(Rat(-2)));
  CHECK(pass.status == CheckStatus::Pass);

  CheckResult fail = clique_intersection_interlacing(Int(2), Int(2), Int(1),
                                                     AlgebraicNumber(Rat(-1)));
  CHECK(fail.status == CheckStatus::Fail);

  CHECK_THROWS_AS(clique_intersection_interlacing(Int(2), Int(2), Int(0),
                                                  AlgebraicNumber(Rat(-1))),
                  std::domain_error);
  CHECK_THROWS_AS(clique_intersection_interlacing(Int(2), Int(3), Int(2),
                                                  AlgebraicNumber(Rat(-1))),
                  std::domain_error);
}

TEST_CASE("quotient scan: the pinned 55-pair exclusion") {
  QuotientScanResult scan = quotient_scan(Int(5), Int(11), Int(20), AlgebraicNumber(Rat(-3)));
  CHECK(scan.pairs.size() == 55);
  for (const auto& p : scan.pairs) CHECK(p.status == CheckStatus::Fail);
  CHECK(scan.summary.status == CheckStatus::Fail);
  CHECK(scan.summary.witnesses.at("pairs") == "55");
  CHECK(scan.summary.witnesses.at("fails") == "55");

  // a single surviving pair flips the summary to PASS
  QuotientScanResult ok = quotient_scan(Int(5), Int(6), Int(6), AlgebraicNumber(Rat(-3)));
  REQUIRE(ok.pairs.size() == 1);
  CHECK(ok.pairs[0].status == CheckStatus::Pass);
  CHECK(ok.summary.status == CheckStatus::Pass);

  // empty range
  QuotientScanResult empty = quotient_scan(Int(5), Int(7), Int(6), AlgebraicNumber(Rat(-3)));
  CHECK(empty.pairs.empty());
  CHECK(empty.summary.status == CheckStatus::NotApplicable);

  CHECK_THROWS_AS(quotient_scan(Int(5), Int(5), Int(9), AlgebraicNumber(Rat(-3))),
                  std::domain_error);
  CHECK_THROWS_AS(quotient_scan(Int(0), Int(3), Int(9), AlgebraicNumber(Rat(-3))),
                  std::domain_error);
}

TEST_CASE("interlacing agrees with floating-point eigenvalues away from ties") {
  std::mt19937 rng(945);
  std::uniform_int_distribution<long long> pick_m(1, 20), pick_span(1, 30);
  std::uniform_int_distribution<long long> pick_num(-70, 0), pick_den(1, 7);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    long long m = pick_m(rng);
    long long v1 = m + pick_span(rng);
    long long v2 = v1 + pick_span(rng) - 1;
    if (v2 < v1) v2 = v1;
    long long num = pick_num(rng), den = pick_den(rng);
    Rat threshold(num, den);

    double q11 = static_cast<double>(m - 1);
    double q12 = static_cast<double>(v1 + v2 - 2 * m);
    double q21 = static_cast<double>(m);
    double q22 = (static_cast<double>((v1 - m) * (v1 - m - 1)) +
                  static_cast<double>((v2 - m) * (v2 - m - 1))) /
                 q12;
    double t = q11 + q22;
    double det = q11 * q22 - q12 * q21;
    double lam = (t - std::sqrt(t * t - 4 * det)) / 2;
    double thr = static_cast<double>(num) / static_cast<double>(den);
    if (std::fabs(lam - thr) < 1e-6) continue;  // too close to trust doubles

    CheckResult row = clique_intersection_interlacing(Int(v1), Int(v2), Int(m),
                                                      AlgebraicNumber(threshold));
    CheckStatus expect = lam < thr ? CheckStatus::Fail : CheckStatus::Pass;
    CAPTURE(v1);
    CAPTURE(v2);
    CAPTURE(m);
    CAPTURE(num);
    CAPTURE(den);
    CHECK(row.status == expect);
    ++compared;
  }
  CHECK(compared > 900);  // the tie filter should discard almost nothing
}

TEST_CASE("equality-case non-neighbour counts telescope down to a contradiction") {
  // local parameters (n, k, c) = (80, 25, 5)
  const Int n(80), k(25), c(5);
  CHECK(equality_case_nonneighbor_count(n, k, c, Int(1)) == 54);
  CHECK(equality_case_nonneighbor_count(n, k, c, Int(2)) == 33);
  CHECK(equality_case_nonneighbor_count(n, k, c, Int(3)) == 17);
  CHECK(equality_case_nonneighbor_count(n, k, c, Int(4)) == 6);
  CHECK(equality_case_nonneighbor_count(n, k, c, Int(5)) == 0);
  CHECK(equality_case_nonneighbor_count(n, k, c, Int(6)) == -1);

  CHECK(eq_case_count_check(n, k, c, Int(5)).status == CheckStatus::Pass);
  CheckResult bad = eq_case_count_check(n, k, c, Int(6));
  CHECK(bad.status == CheckStatus::Fail);
  CHECK(bad.witnesses.at("count") == "-1");
  CHECK_THROWS_AS(eq_case_count_check(n, k, c, Int(0)), std::domain_error);

  // telescoping identity N(s) - N(s+1) = (k+1) - s*c on random parameters
  std::mt19937 rng(81);
  std::uniform_int_distribution<long long> pick(1, 200);
  for (int trial = 0; trial < 200; ++trial) {
    Int rn(pick(rng)), rk(pick(rng)), rc(pick(rng) % 9), rs(1 + pick(rng) % 12);
    Int lhs = equality_case_nonneighbor_count(rn, rk, rc, rs) -
              equality_case_nonneighbor_count(rn, rk, rc, rs + 1);
    CHECK(lhs == rk + 1 - rs * rc);
  }
}
