#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qhchain/rational.hpp"

namespace qhchain {

// Univariate polynomial over the Gaussian rationals, coefficients stored
// ascending (index = power). The zero polynomial is the empty vector;
// otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(long v) { if (v != 0) c_.push_back(GRat(v)); }
  Poly(const GRat& v) { if (!v.is_zero()) c_.push_back(v); }
  explicit Poly(std::vector<GRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return monomial(GRat(1), 1); }
  static Poly monomial(const GRat& coeff, std::size_t power);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  GRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GRat(); }
  const std::vector<GRat>& coeffs() const { return c_; }
  GRat lc() const;
  GRat constant() const { return coeff(0); }

  Poly derivative() const;
  Poly conjugated() const;  // conjugate coefficients (parameter treated real)
  GRat eval(const GRat& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  bool real_coeffs() const;
  // coefficient list as real rationals; throws if any imaginary part is nonzero
  std::vector<Rational> real_coeff_list() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const GRat& s);
  friend Poly operator*(const GRat& s, const Poly& a) { return a * s; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned long e) const;

  // Quotient and remainder in Q(i)[x]; divisor must be nonzero.
  static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Exact quotient; throws ComputeError when the division leaves a remainder.
  Poly divide_exact(const Poly& divisor) const;
  std::optional<Poly> try_divide(const Poly& divisor) const;

  // Monic gcd over the field Q(i).
  static Poly gcd(Poly a, Poly b);

  // Divides by the leading coefficient.
  Poly monic() const;

  std::string str(const std::string& var) const;

 private:
  void trim();
  std::vector<GRat> c_;
};

// Polynomial in an outer variable (energy) whose coefficients are Poly in the
// sweep parameter. Ascending storage, same zero convention as Poly.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(long v) : Poly2(Poly(v)) {}
  Poly2(const Poly& v) { if (!v.is_zero()) c_.push_back(v); trim(); }
  explicit Poly2(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly2 energy() { return monomial(Poly(1), 1); }
  static Poly2 monomial(const Poly& coeff, std::size_t power);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Poly coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Poly(); }
  const std::vector<Poly>& coeffs() const { return c_; }
  Poly lc() const;

  Poly2 derivative() const;  // in the energy variable
  // Substitute a value for the parameter: univariate polynomial in energy.
  Poly at_param(const GRat& v) const;
  // Substitute a value for the energy: polynomial in the parameter.
  Poly at_energy(const GRat& e) const;
  std::complex<double> eval(const std::complex<double>& energy,
                            const std::complex<double>& param) const;

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly& s);
  friend Poly2 operator*(const Poly& s, const Poly2& a) { return a * s; }
  Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
  Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  // Exact quotient in (Q(i)[param])[energy]; every coefficient division must
  // succeed. Throws ComputeError otherwise.
  Poly2 divide_exact(const Poly2& divisor) const;

  std::string str(const std::string& energy_var, const std::string& param_var) const;

 private:
  void trim();
  std::vector<Poly> c_;
};

// Hooks for the generic fraction-free determinant.
inline bool ring_is_zero(const GRat& v) { return v.is_zero(); }
inline bool ring_is_zero(const Poly& v) { return v.is_zero(); }
inline bool ring_is_zero(const Poly2& v) { return v.is_zero(); }
inline GRat ring_exact_div(const GRat& a, const GRat& b) { return a / b; }
inline Poly ring_exact_div(const Poly& a, const Poly& b) { return a.divide_exact(b); }
inline Poly2 ring_exact_div(const Poly2& a, const Poly2& b) { return a.divide_exact(b); }

}  // namespace qhchain
