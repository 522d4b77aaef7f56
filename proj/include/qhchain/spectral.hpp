#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qhchain/gauge.hpp"
#include "qhchain/model.hpp"

namespace qhchain {

struct EigenvalueInfo {
  std::complex<double> value{};
  bool is_real = false;
  bool exact_known = false;  // exact is a certified rational eigenvalue
  Rational exact{};
  int algebraic_multiplicity = 1;
  int geometric_multiplicity = 1;
  bool multiplicity_uncertain = false;  // cluster resolved by tolerance only
  double residual = 0.0;                // ||Hv - Ev|| / (||H|| ||v||)
  std::vector<std::complex<double>> vector;  // representative eigenvector
};

struct SpectrumReport {
  std::vector<EigenvalueInfo> eigenvalues;  // distinct values; multiplicities sum to N
  bool exact_path = false;

  int total_multiplicity() const;
  // All eigenvalues with repetition, sorted by (re, im).
  std::vector<std::complex<double>> values_with_multiplicity() const;
};

// Full spectrum of the chain. Exact entries go through the characteristic
// polynomial: real roots are isolated exactly (with exact multiplicities),
// the remaining complex roots come from simultaneous Newton iteration.
// Numeric entries fall back to a dense solver.
SpectrumReport eigen_general(const ChainModel& model,
                             std::optional<Rational> param, double tol = 1e-9);

// Spectrum through the gauged Hermitian representative Q^{-1} H Q. Requires a
// (Quasi)Hermitian gauge verdict; eigenvalues are real and sorted ascending.
SpectrumReport eigen_hermitian_transformed(const ChainModel& model,
                                           std::optional<Rational> param);

// dim ker(H - E*I) by exact elimination.
int geometric_multiplicity_exact(const ChainModel& model,
                                 std::optional<Rational> param, const GRat& E);

// Numeric rank-deficiency count of H - E*I (singular values below
// tol * sigma_max * N count as zero).
int geometric_multiplicity_numeric(const Eigen::MatrixXcd& h,
                                   std::complex<double> E, double tol = 1e-9);

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<std::vector<std::complex<double>>> states;  // psi(t)
  std::vector<double> transformed_norms;  // ||Q^{-1} psi(t)||_2
  std::vector<double> eta_norms;          // <psi| Q^{-2} |psi>
};

// Metric-preserving evolution psi(t) = Q exp(-it H~) Q^{-1} psi(0). Only
// defined when the gauge exists; the eta-norm column is constant for a sound
// run. t = 0 reproduces psi0 exactly.
EvolutionTrace evolve(const ChainModel& model, std::optional<Rational> param,
                      const std::vector<std::complex<double>>& psi0,
                      const std::vector<double>& times);

}  // namespace qhchain
