#include "qhchain/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace qhchain {

Rational rat_parse(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw UsageError("empty rational literal");
  s = s.substr(first, last - first + 1);

  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw UsageError("bad rational literal: " + text);
    if (q.get_den() == 0) throw UsageError("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  auto exp = s.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw UsageError("bad rational literal: " + text);
    q.canonicalize();
    return q;
  }
  // decimal literal: convert exactly via scaling by powers of ten
  std::string mant = s;
  long e10 = 0;
  if (exp != std::string::npos) {
    e10 = std::strtol(s.c_str() + exp + 1, nullptr, 10);
    mant = s.substr(0, exp);
  }
  dot = mant.find('.');
  if (dot != std::string::npos) {
    e10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "-" || mant == "+")
    throw UsageError("bad rational literal: " + text);
  mpz_class num;
  if (num.set_str(mant, 10) != 0)
    throw UsageError("bad rational literal: " + text);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e10)));
  mpq_class q = (e10 >= 0) ? mpq_class(num * p10) : mpq_class(num, p10);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_double(const Rational& r) { return r.get_d(); }

int rat_sign(const Rational& r) { return sgn(r); }

Rational rat_abs(const Rational& r) { return abs(r); }

Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw ComputeError("zero to a negative power");
    return Rational(1) / rat_pow(base, -exp);
  }
  Rational out(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

mpz_class rat_floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

mpz_class rat_ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

namespace {

// Simplest rational in [lo, hi] with 0 < lo <= hi, by walking the
// Stern-Brocot tree through the shared continued-fraction prefix.
Rational simplest_positive(Rational lo, Rational hi) {
  mpz_class fl = rat_floor(lo);
  if (Rational(fl) == lo) return lo;        // lo itself integral
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // both strictly inside (fl, fl+1): recurse on reciprocals of fractional parts
  Rational a = Rational(1) / (hi - Rational(fl));
  Rational b = Rational(1) / (lo - Rational(fl));
  Rational inner = simplest_positive(a, b);
  return Rational(fl) + Rational(1) / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  // mpq_class(a, b) does not reduce; GMP comparisons assume reduced form, so
  // canonicalize defensively before walking the tree.
  Rational lo = lo_in, hi = hi_in;
  lo.canonicalize();
  hi.canonicalize();
  if (lo > hi) throw UsageError("empty interval");
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (lo > 0) return simplest_positive(lo, hi);
  return -simplest_positive(-hi, -lo);
}

std::string grat_str(const GRat& z) {
  if (z.im == 0) return rat_str(z.re);
  std::string im = rat_str(z.im);
  if (z.re == 0) return im + "*i";
  if (rat_sign(z.im) > 0) return rat_str(z.re) + "+" + im + "*i";
  return rat_str(z.re) + im + "*i";
}

}  // namespace qhchain
