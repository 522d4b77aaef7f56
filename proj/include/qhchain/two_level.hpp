#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace qhchain {

// [[a, r e^{i theta}], [rho e^{-i theta}, b]] with real a, b and r, rho > 0:
// never Hermitian for r != rho, but always similar to a Hermitian matrix
// through a positive diagonal gauge.
struct TwoLevelQuasi {
  double a = 0.0;
  double b = 0.0;
  double r = 1.0;
  double rho = 1.0;
  double theta = 0.0;

  Eigen::Matrix2cd matrix() const;
};

struct HermitizeResult {
  Eigen::Matrix2cd q;        // diag(1, sqrt(rho/r))
  Eigen::Matrix2cd h_tilde;  // Q^{-1} H Q, Hermitian
};

HermitizeResult hermitize_quasi(const TwoLevelQuasi& m);

// [[rho e^{i beta}, r e^{i theta}], [r e^{-i theta}, rho e^{-i beta}]]:
// swap-symmetric under combined conjugation and index exchange; eigenvalues
// rho cos(beta) +- sqrt(r^2 - rho^2 sin^2 beta).
struct TwoLevelPT {
  double rho = 1.0;
  double beta = 0.0;
  double r = 1.0;
  double theta = 0.0;

  Eigen::Matrix2cd matrix() const;
};

enum class PTPhase { Unbroken, Broken, Boundary };

struct PTClassification {
  PTPhase phase = PTPhase::Unbroken;
  bool pt_symmetric = false;  // P conj(H) P == H to tolerance
  double symmetry_residual = 0.0;
  double radicand = 0.0;      // r^2 - rho^2 sin^2 beta
  std::array<std::complex<double>, 2> eigenvalues{};
};

PTClassification pt_classify(const TwoLevelPT& m, double tol = 1e-12);

// Hermitian metric normalized to unit diagonal. Positive-definite exactly
// when the off-diagonal stays inside the unit disk.
struct MetricG {
  std::complex<double> g12{0.0, 0.0};

  double g1() const { return 1.0 - std::abs(g12); }
  double g2() const { return 1.0 + std::abs(g12); }
  bool positive_definite() const { return std::abs(g12) < 1.0; }
  Eigen::Matrix2cd matrix() const;
  // principal square root, closed form (positive-definite only)
  Eigen::Matrix2cd sqrt() const;
  Eigen::Matrix2cd inv_sqrt() const;
};

// Solve adj(H) G = G H for the swap-conjugate family [[a, b], [conj b,
// conj a]]: the component of G12 along b is fixed, the free component is set
// to zero (largest positive-definiteness margin). b = 0 demands real a.
MetricG metric_from_condition(std::complex<double> a, std::complex<double> b);

// G^{1/2} H G^{-1/2} with the precondition adj(H) G = G H checked first.
Eigen::Matrix2cd hermitize_via_G(const Eigen::Matrix2cd& h, const MetricG& g,
                                 double tol = 1e-10);

}  // namespace qhchain
