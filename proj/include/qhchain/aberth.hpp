#pragma once

#include <complex>
#include <vector>

#include "qhchain/poly.hpp"

namespace qhchain {

struct AberthOptions {
  int max_iterations = 200;
  double tol = 1e-12;          // relative backward-error target
  double cluster_rel = 1e-7;   // merge radius relative to the root scale
};

// All complex roots of sum c[k] z^k, coefficients ascending. Exact zero
// trailing coefficients are deflated first (roots at the origin), then the
// remaining roots are found by simultaneous Newton iteration with Aberth
// corrections. Members of a multiple-root cluster are averaged so repeated
// roots come back as identical values. Throws NonConvergence (with the
// per-root residuals) if the iteration stalls, UsageError on degenerate
// input.
std::vector<std::complex<double>> aberth_roots(
    std::vector<std::complex<double>> coeffs, const AberthOptions& opt = {});

// Single-linkage clustering of a root list: values closer than merge_dist are
// grouped; each group is reported once with its size.
struct RootCluster {
  std::complex<double> center;
  int multiplicity;
  double radius;
};
std::vector<RootCluster> cluster_roots(
    const std::vector<std::complex<double>>& roots, double merge_dist);

// Coefficients of a Poly as complex doubles, ascending.
std::vector<std::complex<double>> complex_coeffs(const Poly& p);

}  // namespace qhchain
