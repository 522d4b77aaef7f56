#include "qhchain/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qhchain {

namespace {

using cd = std::complex<double>;

// p(z), p'(z) and the backward-error scale sum |c_k| |z|^k in one pass.
void horner(const std::vector<cd>& c, const cd& z, cd& p, cd& dp, double& scale) {
  p = cd(0.0, 0.0);
  dp = cd(0.0, 0.0);
  scale = 0.0;
  double az = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    scale = scale * az + std::abs(c[k]);
  }
}

}  // namespace

std::vector<cd> aberth_roots(std::vector<cd> coeffs, const AberthOptions& opt) {
  while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  if (coeffs.size() < 2) throw UsageError("root finding needs degree >= 1");
  if (std::abs(coeffs.back()) <= opt.tol)
    throw UsageError("leading coefficient below tolerance");

  std::vector<cd> roots;
  // exact zeros at the low end are roots at the origin
  std::size_t shift = 0;
  while (shift + 1 < coeffs.size() && coeffs[shift] == cd(0.0, 0.0)) ++shift;
  for (std::size_t k = 0; k < shift; ++k) roots.push_back(cd(0.0, 0.0));
  if (shift > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + shift);

  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return roots;
  // normalize to a monic polynomial
  cd lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;

  if (n == 1) {
    roots.push_back(-coeffs[0]);
    return roots;
  }

  // initial guesses on a circle inside the Cauchy bound, angles offset so no
  // guess starts on a coordinate axis
  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(coeffs[k]));
  double radius = 0.5 * (1.0 + bound);
  std::vector<cd> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.37) /
                   static_cast<double>(n);
    z[j] = std::polar(radius, angle);
  }

  std::vector<double> resid(n, 0.0);
  bool converged = false;
  for (int iter = 0; iter < opt.max_iterations && !converged; ++iter) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      cd p, dp;
      double scale;
      horner(coeffs, z[i], p, dp, scale);
      resid[i] = std::abs(p) / std::max(scale, 1e-300);
      if (resid[i] <= opt.tol) continue;
      converged = false;
      if (dp == cd(0.0, 0.0)) {
        z[i] += cd(1e-8 * (1.0 + std::abs(z[i])), 1e-8);
        continue;
      }
      cd newton = p / dp;
      cd repulse(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        cd d = z[i] - z[j];
        if (d == cd(0.0, 0.0)) d = cd(1e-12, 1e-12);
        repulse += 1.0 / d;
      }
      cd denom = 1.0 - newton * repulse;
      if (denom == cd(0.0, 0.0)) denom = cd(1e-12, 0.0);
      z[i] -= newton / denom;
    }
  }
  if (!converged) {
    // accept if every root is already at its attainable accuracy
    double worst = *std::max_element(resid.begin(), resid.end());
    if (worst > 1e-8)
      throw NonConvergence("simultaneous root iteration did not converge", resid);
  }

  // A k-fold root is only locatable to about tol^{1/k}, so its iterates
  // straddle the true value at a spread far above cluster_rel. Merge points
  // whose Weierstrass inclusion disks overlap: for monic p a connected
  // component of k disks D(z_i, n |p(z_i)| / prod_{j != i} |z_i - z_j|)
  // contains exactly k roots. Averaging each component returns repeated
  // roots as identical values without gluing genuinely separated ones.
  double span = 1.0;
  for (const auto& v : z) span = std::max(span, std::abs(v));
  double base = opt.cluster_rel * span;
  std::vector<double> incl(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cd p, dp;
    double scale;
    horner(coeffs, z[i], p, dp, scale);
    double prod = 1.0;
    for (std::size_t j = 0; j < n && prod > 1e-290; ++j)
      if (j != i) prod *= std::abs(z[i] - z[j]);
    incl[i] = prod > 1e-290
                  ? static_cast<double>(n) * std::abs(p) / prod
                  : std::numeric_limits<double>::infinity();
  }
  std::vector<int> group(n, -1);
  int ngroups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    std::vector<std::size_t> members{i};
    group[i] = ngroups++;
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (std::size_t j = 0; j < n; ++j) {
        if (group[j] >= 0) continue;
        double d = std::abs(z[members[m]] - z[j]);
        if (d <= base || d <= incl[members[m]] + incl[j]) {
          group[j] = group[i];
          members.push_back(j);
        }
      }
    }
    cd center(0.0, 0.0);
    for (auto m : members) center += z[m];
    center /= static_cast<double>(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) roots.push_back(center);
  }
  return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<cd>& roots,
                                       double merge_dist) {
  std::vector<RootCluster> out;
  std::vector<int> group(roots.size(), -1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (group[i] >= 0) continue;
    // grow the cluster by single linkage
    std::vector<std::size_t> members{i};
    group[i] = static_cast<int>(out.size());
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (group[j] >= 0) continue;
        if (std::abs(roots[members[m]] - roots[j]) <= merge_dist) {
          group[j] = group[i];
          members.push_back(j);
        }
      }
    }
    cd center(0.0, 0.0);
    for (auto m : members) center += roots[m];
    center /= static_cast<double>(members.size());
    double radius = 0.0;
    for (auto m : members) radius = std::max(radius, std::abs(roots[m] - center));
    out.push_back({center, static_cast<int>(members.size()), radius});
  }
  return out;
}

std::vector<cd> complex_coeffs(const Poly& p) {
  std::vector<cd> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

}  // namespace qhchain
