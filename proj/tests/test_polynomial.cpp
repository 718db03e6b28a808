// Exact polynomial arithmetic: evaluation, squarefree decomposition, Sturm
// chains, and real-root isolation.

#include "doctest.h"

#include "drg/polynomial.hpp"

using namespace drg;

namespace {

IntPoly ip(std::vector<long long> ascending) {
  std::vector<Int> c;
  for (long long x : ascending) c.emplace_back(x);
  return IntPoly{std::move(c)};
}

}  // namespace

TEST_CASE("integer polynomial basics") {
  IntPoly p = ip({2, -3, 0, 1});  // x^3 - 3x + 2 = (x-1)^2 (x+2)
  CHECK(p.degree() == 3);
  CHECK(p.is_monic());
  CHECK(p.eval(Int(1)) == 0);
  CHECK(p.eval(Int(-2)) == 0);
  CHECK(p.eval(Int(2)) == 4);
  CHECK(p.eval(Rat(1, 2)) == Rat(5, 8));

  IntPoly d = p.derivative();  // 3x^2 - 3
  CHECK(d == ip({-3, 0, 3}));
  CHECK(ip({4, 6, 8}).content() == 2);
  CHECK(ip({4, 6, 8}).primitive() == ip({2, 3, 4}));
  CHECK(ip({-4, -6}).primitive() == ip({2, 3}));  // leading made positive

  CHECK(p.deflate(Int(1)) == ip({-2, 1, 1}));  // (x-1)(x+2) after one deflation
  CHECK_THROWS(p.deflate(Int(5)));

  IntPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
}

TEST_CASE("rational polynomial division and gcd") {
  RatPoly a{std::vector<Rat>{Rat(2), Rat(-3), Rat(0), Rat(1)}};  // x^3-3x+2
  RatPoly b{std::vector<Rat>{Rat(-1), Rat(1)}};                  // x-1
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == RatPoly{std::vector<Rat>{Rat(-2), Rat(1), Rat(1)}});  // x^2+x-2

  // gcd((x-1)^2(x+2), (x-1)(x+3)) = x-1 (monic)
  RatPoly c = RatPoly{std::vector<Rat>{Rat(-3), Rat(2), Rat(1)}};  // (x-1)(x+3)
  RatPoly g = gcd(a, c);
  CHECK(g == RatPoly{std::vector<Rat>{Rat(-1), Rat(1)}});

  // to_primitive_int clears denominators
  RatPoly h{std::vector<Rat>{Rat(1, 2), Rat(0), Rat(-1, 3)}};
  CHECK(h.to_primitive_int() == ip({-3, 0, 2}));
}

TEST_CASE("squarefree decomposition separates multiplicities") {
  IntPoly p = ip({2, -3, 0, 1});  // (x-1)^2 (x+2)
  auto factors = squarefree_decompose(p);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].multiplicity == 1);
  CHECK(factors[0].factor == ip({2, 1}));  // x+2
  CHECK(factors[1].multiplicity == 2);
  CHECK(factors[1].factor == ip({-1, 1}));  // x-1

  CHECK(!is_squarefree(p));
  CHECK(is_squarefree(ip({-2, 0, 1})));

  // The pinned characteristic polynomial is squarefree.
  IntPoly chi = ip({-41600, 40, 2166, -107, 1});
  CHECK(is_squarefree(chi));
}

TEST_CASE("sturm chains count real roots exactly") {
  IntPoly p = ip({-2, 0, 1});  // x^2 - 2
  SturmChain sc(p);
  CHECK(sc.count_roots(Rat(0), Rat(2)) == 1);
  CHECK(sc.count_roots(Rat(-2), Rat(0)) == 1);
  CHECK(sc.count_roots(Rat(-2), Rat(2)) == 2);
  CHECK(sc.count_roots(Rat(2), Rat(100)) == 0);
  CHECK(root_bound(p) >= 2);

  // No real roots at all.
  SturmChain none(ip({1, 0, 1}));  // x^2 + 1
  CHECK(none.count_roots(Rat(-100), Rat(100)) == 0);
}

TEST_CASE("root isolation: the pinned eigenvalues fall out in order") {
  IntPoly chi = ip({-41600, 40, 2166, -107, 1});  // (x-80)(x-26)(x-5)(x+4)
  auto roots = isolate_real_roots(chi);
  REQUIRE(roots.size() == 4);
  for (const auto& r : roots) CHECK(r.rational);
  CHECK(roots[0].value == Rat(-4));
  CHECK(roots[1].value == Rat(5));
  CHECK(roots[2].value == Rat(26));
  CHECK(roots[3].value == Rat(80));
}

TEST_CASE("root isolation: mixed rational and irrational roots") {
  // (x-2)(x^2-3) has roots -sqrt(3), sqrt(3), 2.
  IntPoly p = ip({6, -3, -2, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(!roots[0].rational);
  CHECK(roots[0].hi <= Rat(0));
  CHECK(!roots[1].rational);
  CHECK(roots[1].lo >= Rat(0));
  CHECK(roots[1].poly == ip({-3, 0, 1}));  // rational-root-free part
  CHECK(roots[2].rational);
  CHECK(roots[2].value == Rat(2));
  // Isolating interval genuinely brackets: p changes sign across it.
  CHECK(roots[1].poly.eval(roots[1].lo) * roots[1].poly.eval(roots[1].hi) < 0);
}

TEST_CASE("poly_to_string renders descending powers") {
  CHECK(poly_to_string(ip({-1, 1, 1})) == "x^2+x-1");
  CHECK(poly_to_string(ip({-41600, 40, 2166, -107, 1})) ==
        "x^4-107*x^3+2166*x^2+40*x-41600");
}
