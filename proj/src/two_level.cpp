#include "qhchain/two_level.hpp"

#include <cmath>

#include "qhchain/errors.hpp"

namespace qhchain {

namespace {

std::complex<double> phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Eigen::Matrix2cd TwoLevelQuasi::matrix() const {
  Eigen::Matrix2cd h;
  h << std::complex<double>(a, 0.0), r * phase(theta),  //
      rho * phase(-theta), std::complex<double>(b, 0.0);
  return h;
}

HermitizeResult hermitize_quasi(const TwoLevelQuasi& m) {
  if (!(m.r > 0.0) || !(m.rho > 0.0))
    throw UsageError("hop magnitudes must be positive");
  HermitizeResult out;
  double w = std::sqrt(m.rho / m.r);
  out.q = Eigen::Matrix2cd::Zero();
  out.q(0, 0) = 1.0;
  out.q(1, 1) = w;
  double s = std::sqrt(m.r * m.rho);
  out.h_tilde = Eigen::Matrix2cd::Zero();
  out.h_tilde(0, 0) = m.a;
  out.h_tilde(1, 1) = m.b;
  out.h_tilde(0, 1) = s * phase(m.theta);
  out.h_tilde(1, 0) = s * phase(-m.theta);
  return out;
}

Eigen::Matrix2cd TwoLevelPT::matrix() const {
  Eigen::Matrix2cd h;
  h << rho * phase(beta), r * phase(theta),  //
      r * phase(-theta), rho * phase(-beta);
  return h;
}

PTClassification pt_classify(const TwoLevelPT& m, double tol) {
  if (!(m.r > 0.0) || !(m.rho > 0.0))
    throw UsageError("hop magnitudes must be positive");
  PTClassification out;
  Eigen::Matrix2cd h = m.matrix();
  Eigen::Matrix2cd p;
  p << 0.0, 1.0, 1.0, 0.0;
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  out.symmetry_residual = (p * h.conjugate() * p - h).cwiseAbs().maxCoeff() / scale;
  out.pt_symmetric = out.symmetry_residual <= tol;

  out.radicand = m.r * m.r - m.rho * m.rho * std::sin(m.beta) * std::sin(m.beta);
  double mean = m.rho * std::cos(m.beta);
  double dscale = m.r * m.r + m.rho * m.rho;
  if (std::abs(out.radicand) <= tol * dscale) {
    out.phase = PTPhase::Boundary;
    out.eigenvalues = {std::complex<double>(mean, 0.0),
                       std::complex<double>(mean, 0.0)};
  } else if (out.radicand > 0.0) {
    out.phase = PTPhase::Unbroken;
    double root = std::sqrt(out.radicand);
    out.eigenvalues = {std::complex<double>(mean - root, 0.0),
                       std::complex<double>(mean + root, 0.0)};
  } else {
    out.phase = PTPhase::Broken;
    double root = std::sqrt(-out.radicand);
    out.eigenvalues = {std::complex<double>(mean, -root),
                       std::complex<double>(mean, root)};
  }
  return out;
}

Eigen::Matrix2cd MetricG::matrix() const {
  Eigen::Matrix2cd g;
  g << 1.0, g12, std::conj(g12), 1.0;
  return g;
}

Eigen::Matrix2cd MetricG::sqrt() const {
  if (!positive_definite())
    throw UsageError("metric is not positive-definite");
  double g = std::abs(g12);
  // (alpha I + beta M)^2 = G for M = [[0, g12], [conj g12, 0]]
  double alpha = (std::sqrt(1.0 + g) + std::sqrt(1.0 - g)) / 2.0;
  double beta = g == 0.0 ? 0.5 : (std::sqrt(1.0 + g) - std::sqrt(1.0 - g)) / (2.0 * g);
  Eigen::Matrix2cd out;
  out << alpha, beta * g12, beta * std::conj(g12), alpha;
  return out;
}

Eigen::Matrix2cd MetricG::inv_sqrt() const {
  Eigen::Matrix2cd s = sqrt();
  double g = std::abs(g12);
  double det = std::sqrt(1.0 - g * g);  // det of the square root
  Eigen::Matrix2cd out;
  out << s(1, 1) / det, -s(0, 1) / det, -s(1, 0) / det, s(0, 0) / det;
  return out;
}

MetricG metric_from_condition(std::complex<double> a, std::complex<double> b) {
  MetricG g;
  double bn = std::abs(b);
  if (bn == 0.0) {
    if (a.imag() != 0.0)
      throw ComputeError(
          "no unit-diagonal metric exists: zero coupling with complex level");
    g.g12 = 0.0;
    return g;
  }
  // Im(G12 conj(b)) = -Im(a) fixes the component of G12 along i*b; the
  // component along b is free and set to zero.
  g.g12 = std::complex<double>(0.0, -a.imag() / (bn * bn)) * b;
  return g;
}

Eigen::Matrix2cd hermitize_via_G(const Eigen::Matrix2cd& h, const MetricG& g,
                                 double tol) {
  if (!g.positive_definite())
    throw UsageError("metric is not positive-definite");
  Eigen::Matrix2cd gm = g.matrix();
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  double residual =
      (h.adjoint() * gm - gm * h).cwiseAbs().maxCoeff() / scale;
  if (residual > tol)
    throw UsageError("metric condition fails: residual " +
                     std::to_string(residual));
  Eigen::Matrix2cd ht = g.sqrt() * h * g.inv_sqrt();
  double herm = (ht - ht.adjoint().eval()).cwiseAbs().maxCoeff() / scale;
  if (herm > 1e3 * tol)
    throw ComputeError("hermitization failed: asymmetry " +
                       std::to_string(herm));
  return ht;
}

}  // namespace qhchain
