#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "qhchain/poly.hpp"

namespace qhchain {

// Ratio of parameter polynomials. Bond and diagonal entries always have a
// constant denominator (normalized away); a nontrivial denominator is only
// admitted on ring-closure corner entries.
struct RatFunc {
  Poly num;
  Poly den;

  RatFunc() : num(), den(1) {}
  RatFunc(long v) : num(v), den(1) {}
  RatFunc(const GRat& v) : num(v), den(1) {}
  RatFunc(Poly n) : num(std::move(n)), den(1) {}
  RatFunc(Poly n, Poly d);

  bool is_zero() const { return num.is_zero(); }
  bool is_poly() const { return den.degree() == 0; }
  bool is_constant() const { return num.is_constant() && is_poly(); }
  // numerator with the constant denominator folded in; throws when den is
  // nonconstant
  Poly as_poly() const;
  GRat as_constant() const;

  RatFunc conjugated() const;
  bool is_real() const;

  GRat eval(const GRat& x) const;  // throws ComputeError at a pole
  std::complex<double> eval(const std::complex<double>& x) const;

  // gcd-reduced, denominator scaled to constant term 1 (or monic when the
  // constant term vanishes)
  RatFunc normalized() const;

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);  // cross-multiplied
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
};

enum class Boundary { Obc, Pbc };
enum class EntryKind { Exact, Numeric };

// Tridiagonal chain Hamiltonian, optionally ring-closed by a pair of corner
// entries. Entries are either all exact (parameter rational functions) or all
// numeric (complex doubles); the diagonal is real in both cases.
struct ChainModel {
  int n = 0;
  Boundary boundary = Boundary::Obc;
  EntryKind kind = EntryKind::Exact;
  std::string parameter;  // empty when the model has no free parameter

  // exact entries (kind == Exact)
  std::vector<RatFunc> diag, upper, lower;  // sizes n, n-1, n-1
  RatFunc corner_upper;  // H_{1,n}
  RatFunc corner_lower;  // H_{n,1}

  // numeric entries (kind == Numeric)
  std::vector<std::complex<double>> ndiag, nupper, nlower;
  std::complex<double> ncorner_upper{0.0, 0.0};
  std::complex<double> ncorner_lower{0.0, 0.0};

  bool exact() const { return kind == EntryKind::Exact; }
  bool has_parameter() const { return !parameter.empty(); }
  bool pbc() const { return boundary == Boundary::Pbc; }

  // Structural and reality invariants; throws UsageError with a descriptive
  // location on violation.
  void validate() const;

  // Dense numeric matrix. Exact models require a parameter value iff they
  // declare a parameter; numeric models forbid one.
  Eigen::MatrixXcd dense_numeric(
      std::optional<std::complex<double>> param = std::nullopt) const;

  // Dense exact matrix at a rational parameter value (exact models only).
  std::vector<std::vector<GRat>> dense_exact(
      std::optional<Rational> param = std::nullopt) const;
};

// JSON descriptor: {"n", "boundary", "parameter"?, "diag", "upper", "lower",
// "corner"?}. Entry forms: integer, float, "p/q" string, [re, im] pair,
// {"poly": [c0, c1, ...]} and, on corner entries only,
// {"poly": [...], "den": [...]}.
ChainModel load_model(const nlohmann::json& descriptor);
ChainModel load_model_file(const std::string& path);
nlohmann::json model_to_json(const ChainModel& model);

// FNV-1a 64 over the canonical serialized descriptor; stable across runs.
std::uint64_t model_hash(const ChainModel& model);
std::string model_hash_hex(const ChainModel& model);

}  // namespace qhchain
