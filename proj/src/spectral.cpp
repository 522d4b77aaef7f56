#include "qhchain/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qhchain/aberth.hpp"
#include "qhchain/charpoly.hpp"
#include "qhchain/isolate.hpp"
#include "qhchain/linalg.hpp"

namespace qhchain {

namespace {

std::complex<double> param_complex(const ChainModel& m,
                                   std::optional<Rational> param) {
  if (m.has_parameter()) {
    if (!param) throw UsageError("model has a parameter; supply a value");
    return {rat_double(*param), 0.0};
  }
  if (param) throw UsageError("model has no parameter");
  return {0.0, 0.0};
}

Eigen::MatrixXcd dense_for(const ChainModel& m, std::optional<Rational> param) {
  if (m.exact())
    return m.dense_numeric(m.has_parameter()
                               ? std::optional<std::complex<double>>(
                                     param_complex(m, param))
                               : std::nullopt);
  if (param) throw UsageError("numeric models take no parameter value");
  return m.dense_numeric(std::nullopt);
}

// Best kernel approximation of H - E*I: the right singular vector of the
// smallest singular value. Deterministic, no starting guess needed.
Eigen::VectorXcd kernel_vector(const Eigen::MatrixXcd& h,
                               std::complex<double> e) {
  Eigen::Index n = h.rows();
  Eigen::MatrixXcd a = h - e * Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().col(n - 1);
}

double pair_residual(const Eigen::MatrixXcd& h, std::complex<double> e,
                     const Eigen::VectorXcd& v) {
  double hn = h.norm();
  double vn = v.norm();
  if (vn == 0.0) return std::numeric_limits<double>::infinity();
  return (h * v - e * v).norm() / (std::max(hn, 1.0) * vn);
}

void attach_pair(EigenvalueInfo& info, const Eigen::MatrixXcd& h) {
  Eigen::VectorXcd v = kernel_vector(h, info.value);
  info.residual = pair_residual(h, info.value, v);
  info.vector.assign(v.data(), v.data() + v.size());
}

SpectrumReport numeric_spectrum(const Eigen::MatrixXcd& h, double tol) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw ComputeError("dense eigensolver failed to converge");
  std::vector<std::complex<double>> vals(es.eigenvalues().data(),
                                         es.eigenvalues().data() + h.rows());
  double scale = 1.0;
  for (auto v : vals) scale = std::max(scale, std::abs(v));
  SpectrumReport rep;
  for (const RootCluster& c : cluster_roots(vals, 1e-7 * scale)) {
    EigenvalueInfo info;
    info.value = c.center;
    info.algebraic_multiplicity = c.multiplicity;
    info.multiplicity_uncertain = c.multiplicity > 1;
    info.is_real = std::abs(c.center.imag()) <= tol * scale;
    if (info.is_real) info.value.imag(0.0);
    info.geometric_multiplicity =
        c.multiplicity == 1 ? 1
                            : geometric_multiplicity_numeric(h, info.value);
    attach_pair(info, h);
    rep.eigenvalues.push_back(std::move(info));
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const EigenvalueInfo& a, const EigenvalueInfo& b) {
              if (a.value.real() != b.value.real())
                return a.value.real() < b.value.real();
              return a.value.imag() < b.value.imag();
            });
  return rep;
}

}  // namespace

int SpectrumReport::total_multiplicity() const {
  int t = 0;
  for (const auto& e : eigenvalues) t += e.algebraic_multiplicity;
  return t;
}

std::vector<std::complex<double>> SpectrumReport::values_with_multiplicity()
    const {
  std::vector<std::complex<double>> out;
  for (const auto& e : eigenvalues)
    for (int k = 0; k < e.algebraic_multiplicity; ++k) out.push_back(e.value);
  std::sort(out.begin(), out.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return out;
}

SpectrumReport eigen_general(const ChainModel& model,
                             std::optional<Rational> param, double tol) {
  model.validate();
  Eigen::MatrixXcd h = dense_for(model, param);
  if (!model.exact() || model.n > 64) return numeric_spectrum(h, tol);

  Poly p = char_poly_at(model, param);
  double root_scale = 1.0;
  SpectrumReport rep;
  rep.exact_path = true;

  for (const SquareFreeFactor& sf : square_free_factors(p)) {
    const Poly& f = sf.poly;
    std::vector<EigenvalueInfo> found;
    if (f.real_coeffs()) {
      std::vector<RealRoot> rr = isolate_real_roots(f);
      for (const RealRoot& r : rr) {
        EigenvalueInfo info;
        info.value = {r.approx, 0.0};
        info.is_real = true;
        if (r.is_exact()) {
          info.exact_known = true;
          info.exact = *r.exact;
        }
        found.push_back(std::move(info));
      }
      if (static_cast<int>(rr.size()) < f.degree()) {
        // complex pairs remain: locate them numerically and peel off the
        // copies that belong to the isolated real roots
        std::vector<std::complex<double>> ab = aberth_roots(complex_coeffs(f));
        double scale = 1.0;
        for (auto z : ab) scale = std::max(scale, std::abs(z));
        std::vector<bool> used(ab.size(), false);
        bool matched = true;
        for (const RealRoot& r : rr) {
          std::size_t best = ab.size();
          double bestd = std::numeric_limits<double>::infinity();
          for (std::size_t k = 0; k < ab.size(); ++k) {
            if (used[k]) continue;
            double d = std::abs(ab[k] - std::complex<double>(r.approx, 0.0));
            if (d < bestd) {
              bestd = d;
              best = k;
            }
          }
          if (best == ab.size() || bestd > 1e-6 * scale) {
            matched = false;
            break;
          }
          used[best] = true;
        }
        if (matched) {
          for (std::size_t k = 0; k < ab.size(); ++k) {
            if (used[k]) continue;
            EigenvalueInfo info;
            info.value = ab[k];
            info.is_real = false;
            found.push_back(std::move(info));
          }
        } else {
          // tolerance-limited fallback: trust the numeric root list
          found.clear();
          for (auto z : ab) {
            EigenvalueInfo info;
            info.value = z;
            info.is_real = std::abs(z.imag()) <= 1e-9 * scale;
            if (info.is_real) info.value.imag(0.0);
            info.multiplicity_uncertain = true;
            found.push_back(std::move(info));
          }
        }
      }
    } else {
      std::vector<std::complex<double>> ab = aberth_roots(complex_coeffs(f));
      double scale = 1.0;
      for (auto z : ab) scale = std::max(scale, std::abs(z));
      for (auto z : ab) {
        EigenvalueInfo info;
        info.value = z;
        info.is_real = std::abs(z.imag()) <= 1e-9 * scale;
        if (info.is_real) info.value.imag(0.0);
        found.push_back(std::move(info));
      }
    }
    for (auto& info : found) {
      info.algebraic_multiplicity = sf.power;
      root_scale = std::max(root_scale, std::abs(info.value));
      rep.eigenvalues.push_back(std::move(info));
    }
  }

  for (auto& info : rep.eigenvalues) {
    if (info.algebraic_multiplicity == 1)
      info.geometric_multiplicity = 1;
    else if (info.exact_known)
      info.geometric_multiplicity =
          geometric_multiplicity_exact(model, param, GRat(info.exact));
    else
      info.geometric_multiplicity =
          geometric_multiplicity_numeric(h, info.value, tol);
    attach_pair(info, h);
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const EigenvalueInfo& a, const EigenvalueInfo& b) {
              if (a.value.real() != b.value.real())
                return a.value.real() < b.value.real();
              return a.value.imag() < b.value.imag();
            });
  return rep;
}

SpectrumReport eigen_hermitian_transformed(const ChainModel& model,
                                           std::optional<Rational> param) {
  GaugeReport g = build_gauge(model, param);
  if (g.verdict == GaugeVerdict::NotQuasiHermitian)
    throw UsageError("no Hermitian representative: " + g.reason);
  Eigen::Index n = model.n;
  Eigen::MatrixXcd h = dense_for(model, param);
  Eigen::MatrixXcd ht = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) ht(j, j) = h(j, j).real();
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    ht(j, j + 1) = g.upper_t[static_cast<std::size_t>(j)];
    ht(j + 1, j) = g.lower_t[static_cast<std::size_t>(j)];
  }
  if (model.pbc()) {
    ht(0, n - 1) = g.corner_upper_t;
    ht(n - 1, 0) = g.corner_lower_t;
  }
  // enforce exact Hermitian symmetry before the symmetric solver
  ht = (ht + ht.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ht);
  if (es.info() != Eigen::Success)
    throw ComputeError("symmetric eigensolver failed to converge");

  double scale = std::max(1.0, std::abs(es.eigenvalues().cwiseAbs().maxCoeff()));
  SpectrumReport rep;
  for (Eigen::Index k = 0; k < n; ++k) {
    double w = es.eigenvalues()(k);
    if (!rep.eigenvalues.empty() &&
        std::abs(rep.eigenvalues.back().value.real() - w) <= 1e-9 * scale) {
      rep.eigenvalues.back().algebraic_multiplicity++;
      rep.eigenvalues.back().geometric_multiplicity++;
      rep.eigenvalues.back().multiplicity_uncertain = true;
      continue;
    }
    EigenvalueInfo info;
    info.value = {w, 0.0};
    info.is_real = true;
    // eigenvector of the original H: scale the transformed one by Q
    Eigen::VectorXcd v = es.eigenvectors().col(k);
    for (Eigen::Index j = 0; j < n; ++j)
      v(j) *= g.q[static_cast<std::size_t>(j)];
    info.residual = pair_residual(h, info.value, v);
    info.vector.assign(v.data(), v.data() + v.size());
    rep.eigenvalues.push_back(std::move(info));
  }
  return rep;
}

int geometric_multiplicity_exact(const ChainModel& model,
                                 std::optional<Rational> param, const GRat& E) {
  auto h = model.dense_exact(param);
  std::size_t n = h.size();
  for (std::size_t j = 0; j < n; ++j) h[j][j] -= E;
  return static_cast<int>(n - gmat_rank(std::move(h)));
}

int geometric_multiplicity_numeric(const Eigen::MatrixXcd& h,
                                   std::complex<double> E, double tol) {
  Eigen::Index n = h.rows();
  Eigen::MatrixXcd a = h - E * Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  double smax = svd.singularValues()(0);
  if (smax == 0.0) return static_cast<int>(n);
  int null_dim = 0;
  for (Eigen::Index k = 0; k < n; ++k)
    if (svd.singularValues()(k) <= tol * smax * static_cast<double>(n))
      ++null_dim;
  return null_dim;
}

EvolutionTrace evolve(const ChainModel& model, std::optional<Rational> param,
                      const std::vector<std::complex<double>>& psi0,
                      const std::vector<double>& times) {
  GaugeReport g = build_gauge(model, param);
  if (g.verdict == GaugeVerdict::NotQuasiHermitian)
    throw UsageError("no metric-preserving propagator: " + g.reason);
  Eigen::Index n = model.n;
  if (static_cast<Eigen::Index>(psi0.size()) != n)
    throw UsageError("initial state has the wrong length");
  Eigen::VectorXcd psi(n);
  for (Eigen::Index j = 0; j < n; ++j) psi(j) = psi0[static_cast<std::size_t>(j)];
  if (psi.norm() == 0.0) throw UsageError("initial state is zero");

  Eigen::MatrixXcd h = dense_for(model, param);
  Eigen::MatrixXcd ht = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) ht(j, j) = h(j, j).real();
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    ht(j, j + 1) = g.upper_t[static_cast<std::size_t>(j)];
    ht(j + 1, j) = g.lower_t[static_cast<std::size_t>(j)];
  }
  if (model.pbc()) {
    ht(0, n - 1) = g.corner_upper_t;
    ht(n - 1, 0) = g.corner_lower_t;
  }
  ht = (ht + ht.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ht);
  if (es.info() != Eigen::Success)
    throw ComputeError("symmetric eigensolver failed to converge");

  Eigen::VectorXcd phi0(n);
  for (Eigen::Index j = 0; j < n; ++j)
    phi0(j) = psi(j) / g.q[static_cast<std::size_t>(j)];
  Eigen::VectorXcd coeffs = es.eigenvectors().adjoint() * phi0;

  EvolutionTrace trace;
  for (double t : times) {
    Eigen::VectorXcd phi(n), state(n);
    if (t == 0.0) {
      phi = phi0;
      state = psi;
    } else {
      Eigen::VectorXcd rotated(n);
      for (Eigen::Index k = 0; k < n; ++k)
        rotated(k) =
            coeffs(k) * std::exp(std::complex<double>(0.0, -es.eigenvalues()(k) * t));
      phi = es.eigenvectors() * rotated;
      for (Eigen::Index j = 0; j < n; ++j)
        state(j) = phi(j) * g.q[static_cast<std::size_t>(j)];
    }
    double eta = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      double qj = g.q[static_cast<std::size_t>(j)];
      eta += std::norm(state(j)) / (qj * qj);
    }
    trace.times.push_back(t);
    trace.states.emplace_back(state.data(), state.data() + n);
    trace.transformed_norms.push_back(phi.norm());
    trace.eta_norms.push_back(eta);
  }
  return trace;
}

}  // namespace qhchain
