#include <cmath>

#include "doctest.h"
#include "qhchain/isolate.hpp"

using namespace qhchain;

namespace {
Poly from_ints(std::initializer_list<long> cs) {
  std::vector<GRat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(v);
}
}  // namespace

TEST_CASE("rational roots come back exact") {
  // (x - 1)(x + 2)(x - 1/3), scaled integer: (x-1)(x+2)(3x-1)
  Poly p = from_ints({-1, 1}) * from_ints({2, 1}) * from_ints({-1, 3});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].is_exact());
  CHECK(*roots[0].exact == Rational(-2));
  CHECK(*roots[1].exact == Rational(1, 3));
  CHECK(*roots[2].exact == Rational(1));
  for (const auto& r : roots) CHECK(r.multiplicity == 1);
}

TEST_CASE("multiplicities are exact") {
  Poly p = from_ints({-1, 1}).pow(2) * from_ints({2, 1}).pow(3);
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 3);  // x = -2
  CHECK(roots[1].multiplicity == 2);  // x = 1
}

TEST_CASE("irrational roots get tight disjoint intervals") {
  Poly p = from_ints({-2, 0, 1});  // x^2 - 2
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  const auto& r = roots[1];
  CHECK_FALSE(r.is_exact());
  CHECK(r.hi - r.lo <= default_isolation_width());
  CHECK(rat_double(r.lo) <= std::sqrt(2.0));
  CHECK(std::sqrt(2.0) <= rat_double(r.hi));
  CHECK(doctest::Approx(r.approx).epsilon(1e-10) == std::sqrt(2.0));
  // intervals are disjoint and sorted
  CHECK(roots[0].hi < roots[1].lo);
}

TEST_CASE("no real roots means an empty list") {
  CHECK(isolate_real_roots(from_ints({1, 0, 1})).empty());
  CHECK(isolate_real_roots(from_ints({5})).empty());
}

TEST_CASE("zero and complex polynomials are rejected") {
  CHECK_THROWS_AS(isolate_real_roots(Poly()), UsageError);
  std::vector<GRat> cc{GRat(Rational(0), Rational(1)), GRat(1L)};
  CHECK_THROWS_AS(isolate_real_roots(Poly(cc)), UsageError);
}

TEST_CASE("close roots are separated") {
  // roots at 1/1000 and 1/1001: (1000x - 1)(1001x - 1)
  Poly p = from_ints({-1, 1000}) * from_ints({-1, 1001});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(*roots[0].exact == Rational(1, 1001));
  CHECK(*roots[1].exact == Rational(1, 1000));
}

TEST_CASE("square-free decomposition is a factorization") {
  Poly a = from_ints({-1, 1});
  Poly b = from_ints({3, 1});
  Poly f = a.pow(3) * b * GRat(Rational(7, 2));
  auto factors = square_free_factors(f);
  Poly rebuilt(f.lc());
  for (const auto& sf : factors) {
    for (int i = 0; i < sf.power; ++i) rebuilt = rebuilt * sf.poly;
    CHECK(sf.poly.lc().is_one());
  }
  CHECK(rebuilt == f);
}

TEST_CASE("compare_root refines until the order is decided") {
  Poly p = from_ints({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  RealRoot pos = roots[1];  // sqrt(2)
  CHECK(compare_root(pos, Rational(1)) > 0);
  CHECK(compare_root(pos, Rational(2)) < 0);
  // 1414213562/10^9 < sqrt(2): needs refinement well past the default width
  CHECK(compare_root(pos, Rational(1414213562, 1000000000)) > 0);
  RealRoot ex = roots[0];
  ex.exact = Rational(-99);  // exact branch
  ex.lo = ex.hi = *ex.exact;
  CHECK(compare_root(ex, Rational(-99)) == 0);
}

TEST_CASE("high-degree polynomial with clustered roots stays exact") {
  // prod (x - k/10), k = 1..8
  Poly p(1);
  for (long k = 1; k <= 8; ++k) p = p * from_ints({-k, 10});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 8);
  for (long k = 1; k <= 8; ++k) {
    Rational want(k, 10);
    want.canonicalize();
    REQUIRE(roots[static_cast<std::size_t>(k - 1)].is_exact());
    CHECK(*roots[static_cast<std::size_t>(k - 1)].exact == want);
  }
}
