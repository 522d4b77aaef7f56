#include "doctest.h"
#include "qhchain/poly.hpp"

using namespace qhchain;

namespace {
Poly from_ints(std::initializer_list<long> cs) {
  std::vector<GRat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(v);
}
}  // namespace

TEST_CASE("polynomial basics") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  Poly x = Poly::variable();
  CHECK(x.degree() == 1);
  Poly p = from_ints({-2, 0, 1});  // x^2 - 2
  CHECK(p.eval(GRat(Rational(3))) == GRat(Rational(7)));
  CHECK(p.coeff(0) == GRat(Rational(-2)));
  CHECK(p.coeff(5) == GRat());
  CHECK((p + (-p)).is_zero());
}

TEST_CASE("multiplication and division are inverse") {
  Poly f = from_ints({1, 2, 3, 4});
  Poly g = from_ints({-5, 0, 7});
  Poly prod = f * g;
  CHECK(prod.degree() == f.degree() + g.degree());
  Poly q, r;
  Poly::divrem(prod, g, q, r);
  CHECK(r.is_zero());
  CHECK(q == f);
  CHECK(prod.divide_exact(f) == g);
  CHECK_FALSE((prod + Poly(1)).try_divide(f).has_value());
}

TEST_CASE("divrem leaves a remainder of lower degree") {
  Poly f = from_ints({3, 1, 0, 2, 5});
  Poly g = from_ints({1, 1, 1});
  Poly q, r;
  Poly::divrem(f, g, q, r);
  CHECK(r.degree() < g.degree());
  CHECK(q * g + r == f);
}

TEST_CASE("gcd finds the shared factor, normalized monic") {
  Poly common = from_ints({-1, 1});       // x - 1
  Poly f = common * from_ints({2, 0, 6});
  Poly g = common * from_ints({5, 1});
  Poly d = Poly::gcd(f, g);
  CHECK(d == common);
  CHECK(Poly::gcd(from_ints({1, 1}), from_ints({3})).is_constant());
}

TEST_CASE("derivative and conjugation") {
  Poly p = from_ints({4, -3, 0, 2});  // 2x^3 - 3x + 4
  Poly dp = p.derivative();
  CHECK(dp == from_ints({-3, 0, 6}));
  std::vector<GRat> cc{GRat(Rational(1), Rational(2)), GRat(Rational(0), Rational(-1))};
  Poly c(cc);
  CHECK(c.conjugated().coeff(0) == GRat(Rational(1), Rational(-2)));
  CHECK(c.conjugated().conjugated() == c);
}

TEST_CASE("real coefficient extraction guards against complex input") {
  Poly p = from_ints({1, 0, 1});
  CHECK(p.real_coeffs());
  auto list = p.real_coeff_list();
  REQUIRE(list.size() == 3);
  CHECK(list[2] == Rational(1));
  std::vector<GRat> cc{GRat(Rational(0), Rational(1)), GRat(1L)};
  CHECK_FALSE(Poly(cc).real_coeffs());
}

TEST_CASE("pow by squaring") {
  Poly x1 = from_ints({1, 1});
  Poly p = x1.pow(5);
  CHECK(p.degree() == 5);
  CHECK(p.coeff(2) == GRat(Rational(10)));  // binomial(5,2)
  CHECK(x1.pow(0) == Poly(1));
}

TEST_CASE("complex evaluation matches exact evaluation") {
  Poly p = from_ints({2, -1, 3});
  std::complex<double> z{0.5, -1.25};
  auto exact = p.eval(GRat(Rational(1, 2), Rational(-5, 4)));
  auto approx = p.eval(z);
  CHECK(std::abs(approx - exact.to_complex()) < 1e-14);
}

TEST_CASE("two-variable polynomial: evaluation orders commute") {
  // q(E, t) = E^2 - t*E + (t^2 - 1)
  Poly t = Poly::variable();
  Poly2 q(std::vector<Poly>{t * t - Poly(1), -t, Poly(1)});
  CHECK(q.degree() == 2);
  Rational tv(3, 2);
  Poly at_t = q.at_param(GRat(tv));
  CHECK(at_t.degree() == 2);
  GRat ev = at_t.eval(GRat(Rational(2)));
  // q(2, 3/2) = 4 - 3 + 5/4
  CHECK(ev == GRat(Rational(9, 4)));
  Poly at_e = q.at_energy(Rational(2));
  CHECK(at_e.eval(GRat(tv)) == ev);
  auto z = q.eval(std::complex<double>(2, 0), std::complex<double>(1.5, 0));
  CHECK(std::abs(z - ev.to_complex()) < 1e-13);
}

TEST_CASE("two-variable arithmetic and exact division") {
  Poly2 e = Poly2::energy();
  Poly2 f = (e + Poly2(1)) * (e - Poly2(1));
  CHECK(f == e * e - Poly2(1));
  CHECK(f.divide_exact(e + Poly2(1)) == e - Poly2(1));
  Poly2 d = f.derivative();
  CHECK(d == Poly2(2) * e);
}

TEST_CASE("printing is stable") {
  Poly p = from_ints({-2, 0, 1});
  CHECK(p.str("x") == "(1)*x^2 + (-2)");
  CHECK(Poly().str("x") == "0");
}
