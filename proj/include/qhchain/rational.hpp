#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "qhchain/errors.hpp"

namespace qhchain {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every operation.
using Rational = mpq_class;

// Parses "p", "p/q", or a decimal literal like "-0.25" into an exact value.
Rational rat_parse(const std::string& text);

// "p" or "p/q", denominator omitted when it is 1.
std::string rat_str(const Rational& r);

double rat_double(const Rational& r);
int rat_sign(const Rational& r);
Rational rat_abs(const Rational& r);
Rational rat_pow(const Rational& base, long exp);
bool rat_is_integer(const Rational& r);

mpz_class rat_floor(const Rational& r);
mpz_class rat_ceil(const Rational& r);

// The unique rational with smallest denominator (ties broken by smallest
// numerator magnitude) inside the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

// Gaussian rational: exact complex number with rational real and imaginary
// parts. Closed under +, -, *, / (nonzero divisor).
struct GRat {
  Rational re;
  Rational im;

  GRat() : re(0), im(0) {}
  GRat(long v) : re(v), im(0) {}
  GRat(const Rational& r) : re(r), im(0) {}
  GRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i() { return GRat(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GRat conj() const { return GRat(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  std::complex<double> to_complex() const {
    return {rat_double(re), rat_double(im)};
  }

  friend GRat operator+(const GRat& a, const GRat& b) {
    return GRat(a.re + b.re, a.im + b.im);
  }
  friend GRat operator-(const GRat& a, const GRat& b) {
    return GRat(a.re - b.re, a.im - b.im);
  }
  friend GRat operator-(const GRat& a) { return GRat(-a.re, -a.im); }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GRat operator/(const GRat& a, const GRat& b) {
    if (b.is_zero()) throw ComputeError("division by zero");
    Rational n = b.norm2();
    GRat t = a * b.conj();
    return GRat(t.re / n, t.im / n);
  }
  GRat& operator+=(const GRat& o) { return *this = *this + o; }
  GRat& operator-=(const GRat& o) { return *this = *this - o; }
  GRat& operator*=(const GRat& o) { return *this = *this * o; }
  GRat& operator/=(const GRat& o) { return *this = *this / o; }

  friend bool operator==(const GRat& a, const GRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

// "a", "a+b*i" style rendering for diagnostics and JSON payloads.
std::string grat_str(const GRat& z);

}  // namespace qhchain
