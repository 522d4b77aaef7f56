#include <algorithm>
#include <complex>

#include "doctest.h"
#include "qhchain/aberth.hpp"

using namespace qhchain;
using cplx = std::complex<double>;

namespace {
// residual of sum c[k] z^k at z, relative to the coefficient scale
double backward_error(const std::vector<cplx>& c, cplx z) {
  cplx v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  double scale = 0;
  for (const auto& ck : c) scale = std::max(scale, std::abs(ck));
  return std::abs(v) / scale;
}

std::vector<cplx> sorted(std::vector<cplx> v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}
}  // namespace

TEST_CASE("quadratic with imaginary pair") {
  auto roots = sorted(aberth_roots({{1, 0}, {0, 0}, {1, 0}}));  // z^2 + 1
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - cplx(0, -1)) < 1e-12);
  CHECK(std::abs(roots[1] - cplx(0, 1)) < 1e-12);
}

TEST_CASE("trailing zero coefficients deflate to origin roots") {
  // z^4 + z^3 = z^3 (z + 1)
  auto roots = sorted(aberth_roots({{0, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 0}}));
  REQUIRE(roots.size() == 4);
  CHECK(std::abs(roots[0] - cplx(-1, 0)) < 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(roots[k]) == 0.0);
}

TEST_CASE("repeated roots collapse to identical values") {
  // (z - 1)^3 = -1 + 3z - 3z^2 + z^3
  auto roots = aberth_roots({{-1, 0}, {3, 0}, {-3, 0}, {1, 0}});
  REQUIRE(roots.size() == 3);
  for (const auto& r : roots) {
    CHECK(std::abs(r - cplx(1, 0)) < 1e-3);
    CHECK(r == roots[0]);  // cluster members are averaged to one value
  }
}

TEST_CASE("random-looking dense polynomial has small backward error") {
  std::vector<cplx> c{{3, -1}, {-2, 0.5}, {0, 1}, {4, 0}, {-1, 2}, {1, 1}};
  auto roots = aberth_roots(c);
  REQUIRE(roots.size() == 5);
  for (const auto& r : roots) CHECK(backward_error(c, r) < 1e-10);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(aberth_roots({}), UsageError);
  CHECK_THROWS_AS(aberth_roots({{1, 0}}), UsageError);          // constant
  CHECK_THROWS_AS(aberth_roots({{0, 0}, {0, 0}}), UsageError);  // zero poly
}

TEST_CASE("constant multiples do not change the roots") {
  std::vector<cplx> c{{-6, 0}, {11, 0}, {-6, 0}, {1, 0}};  // (z-1)(z-2)(z-3)
  auto a = sorted(aberth_roots(c));
  for (auto& ck : c) ck *= cplx(0, 2.5);
  auto b = sorted(aberth_roots(c));
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
  CHECK(std::abs(a[0] - cplx(1, 0)) < 1e-10);
  CHECK(std::abs(a[1] - cplx(2, 0)) < 1e-10);
  CHECK(std::abs(a[2] - cplx(3, 0)) < 1e-10);
}

TEST_CASE("root clustering groups nearby values") {
  std::vector<cplx> pts{{1.0, 0}, {1.0 + 1e-9, 0}, {2.0, 0}};
  auto clusters = cluster_roots(pts, 1e-6);
  REQUIRE(clusters.size() == 2);
  int total = 0;
  for (const auto& cl : clusters) total += cl.multiplicity;
  CHECK(total == 3);
  auto big = std::max_element(
      clusters.begin(), clusters.end(),
      [](const RootCluster& x, const RootCluster& y) {
        return x.multiplicity < y.multiplicity;
      });
  CHECK(std::abs(big->center - cplx(1, 0)) < 1e-8);
  CHECK(big->multiplicity == 2);
}

TEST_CASE("poly coefficient extraction is ascending") {
  std::vector<GRat> v{GRat(Rational(1, 2)), GRat(Rational(0), Rational(3))};
  auto c = complex_coeffs(Poly(v));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == cplx(0.5, 0));
  CHECK(c[1] == cplx(0, 3));
}
