#include "doctest.h"
#include "qhchain/rational.hpp"

using namespace qhchain;

TEST_CASE("rational parsing accepts fractions, integers, and decimals") {
  CHECK(rat_parse("3/2") == Rational(3, 2));
  CHECK(rat_parse("-7/21") == Rational(-1, 3));
  CHECK(rat_parse("42") == Rational(42));
  CHECK(rat_parse("  -5 ") == Rational(-5));
  CHECK(rat_parse("0.25") == Rational(1, 4));
  CHECK(rat_parse("-1.5e-2") == Rational(-3, 200));
  CHECK(rat_parse("2e3") == Rational(2000));
}

TEST_CASE("rational parsing rejects junk") {
  CHECK_THROWS_AS(rat_parse(""), UsageError);
  CHECK_THROWS_AS(rat_parse("abc"), UsageError);
  CHECK_THROWS_AS(rat_parse("1/0"), UsageError);
  CHECK_THROWS_AS(rat_parse("1.2.3"), UsageError);
}

TEST_CASE("rational formatting round-trips") {
  for (const char* s : {"0", "1", "-1", "3/2", "-22/7", "1000000000000000001"}) {
    Rational r = rat_parse(s);
    CHECK(rat_parse(rat_str(r)) == r);
    CHECK(rat_str(r) == s);
  }
}

TEST_CASE("rat_pow handles negative exponents and zero") {
  CHECK(rat_pow(Rational(2), 10) == Rational(1024));
  CHECK(rat_pow(Rational(3, 2), -2) == Rational(4, 9));
  CHECK(rat_pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(rat_pow(Rational(0), -1), ComputeError);
}

TEST_CASE("floor and ceil agree with exact division") {
  CHECK(rat_floor(Rational(7, 2)) == 3);
  CHECK(rat_floor(Rational(-7, 2)) == -4);
  CHECK(rat_ceil(Rational(7, 2)) == 4);
  CHECK(rat_ceil(Rational(-7, 2)) == -3);
  CHECK(rat_floor(Rational(6)) == 6);
}

TEST_CASE("simplest_between picks the lowest-denominator representative") {
  CHECK(simplest_between(Rational(-1, 10), Rational(1, 10)) == Rational(0));
  CHECK(simplest_between(Rational(3, 7), Rational(5, 8)) == Rational(1, 2));
  CHECK(simplest_between(Rational(13, 10), Rational(29, 20)) == Rational(4, 3));
  CHECK(simplest_between(Rational(2), Rational(3)) == Rational(2));
  CHECK(simplest_between(Rational(-29, 20), Rational(-13, 10)) ==
        Rational(-4, 3));
  // the answer always lies inside the interval (even for unreduced inputs)
  Rational lo(665857, 470832), hi(665858, 470832);
  Rational s = simplest_between(lo, hi);
  CHECK(lo <= s);
  CHECK(s <= hi);
}

TEST_CASE("gaussian rational arithmetic") {
  GRat i(Rational(0), Rational(1));
  GRat z(Rational(3), Rational(-2));
  CHECK(i * i == GRat(Rational(-1), Rational(0)));
  CHECK((z * z.conj()).is_real());
  CHECK(z * z.conj() == GRat(Rational(13), Rational(0)));
  CHECK(z + (-z) == GRat());
  CHECK((z / z) == GRat(Rational(1), Rational(0)));
  CHECK_THROWS_AS(z / GRat(), ComputeError);
}

TEST_CASE("gaussian rational formatting") {
  CHECK(grat_str(GRat(Rational(3, 2), Rational(0))) == "3/2");
  CHECK(grat_str(GRat(Rational(0), Rational(1))) == "1*i");
  CHECK(grat_str(GRat(Rational(0), Rational(-1))) == "-1*i");
  CHECK(grat_str(GRat(Rational(1), Rational(2))) == "1+2*i");
  CHECK(grat_str(GRat(Rational(-1, 2), Rational(-1, 3))) == "-1/2-1/3*i");
  CHECK(grat_str(GRat()) == "0");
}
