#include "qhchain/poly.hpp"

#include <algorithm>

namespace qhchain {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const GRat& coeff, std::size_t power) {
  Poly p;
  if (coeff.is_zero()) return p;
  p.c_.assign(power + 1, GRat());
  p.c_[power] = coeff;
  return p;
}

GRat Poly::lc() const {
  if (c_.empty()) return GRat();
  return c_.back();
}

Poly Poly::derivative() const {
  Poly d;
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.c_[k - 1] = c_[k] * GRat(static_cast<long>(k));
  d.trim();
  return d;
}

Poly Poly::conjugated() const {
  Poly out;
  out.c_ = c_;
  for (auto& v : out.c_) v = v.conj();
  return out;
}

GRat Poly::eval(const GRat& x) const {
  GRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + it->to_complex();
  return acc;
}

bool Poly::real_coeffs() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const GRat& v) { return v.is_real(); });
}

std::vector<Rational> Poly::real_coeff_list() const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& v : c_) {
    if (!v.is_real()) throw ComputeError("polynomial has complex coefficients");
    out.push_back(v.re);
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.c_.size(); ++k)
    out.c_[k] = a.coeff(k) + b.coeff(k);
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& v : out.c_) v = -v;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, GRat());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

Poly operator*(const Poly& a, const GRat& s) {
  Poly out;
  if (s.is_zero()) return out;
  out.c_ = a.c_;
  for (auto& v : out.c_) v *= s;
  return out;
}

Poly Poly::pow(unsigned long e) const {
  Poly out(1), b = *this;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw ComputeError("polynomial division by zero");
  q = Poly();
  r = a;
  GRat inv_lc = GRat(1) / b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    GRat t = r.lc() * inv_lc;
    Poly term = Poly::monomial(t, shift);
    q += term;
    r -= term * b;
  }
}

Poly Poly::divide_exact(const Poly& divisor) const {
  Poly q, r;
  divrem(*this, divisor, q, r);
  if (!r.is_zero()) throw ComputeError("inexact polynomial division");
  return q;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
  Poly q, r;
  divrem(*this, divisor, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (GRat(1) / lc());
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    GRat v = coeff(static_cast<std::size_t>(k));
    if (v.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string term = "(" + grat_str(v) + ")";
    if (k == 1)
      term += "*" + var;
    else if (k > 1)
      term += "*" + var + "^" + std::to_string(k);
    out += term;
  }
  return out;
}

void Poly2::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly2 Poly2::monomial(const Poly& coeff, std::size_t power) {
  Poly2 p;
  if (coeff.is_zero()) return p;
  p.c_.assign(power + 1, Poly());
  p.c_[power] = coeff;
  return p;
}

Poly Poly2::lc() const {
  if (c_.empty()) return Poly();
  return c_.back();
}

Poly2 Poly2::derivative() const {
  Poly2 d;
  if (c_.size() <= 1) return d;
  d.c_.resize(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.c_[k - 1] = c_[k] * GRat(static_cast<long>(k));
  d.trim();
  return d;
}

Poly Poly2::at_param(const GRat& v) const {
  std::vector<GRat> coeffs;
  coeffs.reserve(c_.size());
  for (const auto& p : c_) coeffs.push_back(p.eval(v));
  return Poly(std::move(coeffs));
}

Poly Poly2::at_energy(const GRat& e) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * e + *it;
  return acc;
}

std::complex<double> Poly2::eval(const std::complex<double>& energy,
                                 const std::complex<double>& param) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * energy + it->eval(param);
  return acc;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.c_.size(); ++k)
    out.c_[k] = a.coeff(k) + b.coeff(k);
  out.trim();
  return out;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator-(const Poly2& a) {
  Poly2 out = a;
  for (auto& v : out.c_) v = -v;
  return out;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Poly());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

Poly2 operator*(const Poly2& a, const Poly& s) {
  Poly2 out;
  if (s.is_zero()) return out;
  out.c_ = a.c_;
  for (auto& v : out.c_) v *= s;
  out.trim();
  return out;
}

Poly2 Poly2::divide_exact(const Poly2& divisor) const {
  if (divisor.is_zero()) throw ComputeError("polynomial division by zero");
  Poly2 q;
  Poly2 r = *this;
  while (!r.is_zero() && r.degree() >= divisor.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - divisor.degree());
    Poly t = r.lc().divide_exact(divisor.lc());
    Poly2 term = Poly2::monomial(t, shift);
    q += term;
    r -= term * divisor;
  }
  if (!r.is_zero()) throw ComputeError("inexact bivariate division");
  return q;
}

std::string Poly2::str(const std::string& energy_var,
                       const std::string& param_var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Poly v = coeff(static_cast<std::size_t>(k));
    if (v.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string term = "(" + v.str(param_var) + ")";
    if (k == 1)
      term += "*" + energy_var;
    else if (k > 1)
      term += "*" + energy_var + "^" + std::to_string(k);
    out += term;
  }
  return out;
}

}  // namespace qhchain
