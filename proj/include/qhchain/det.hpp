#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhchain/poly.hpp"

namespace qhchain {

// Fraction-free (Bareiss) determinant over any integral domain providing
// ring_is_zero and ring_exact_div. Every interior division is exact by
// construction, so the result is exact for rationals and polynomial rings
// alike. Destroys its argument.
template <typename R>
R bareiss_det(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  for (const auto& row : m)
    if (row.size() != n) throw UsageError("determinant needs a square matrix");

  bool negate = false;
  std::optional<R> prev;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m[k][k])) {
      std::size_t pivot = k;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!ring_is_zero(m[r][k])) { pivot = r; break; }
      if (pivot == k) return R(0);  // whole column zero below the diagonal
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev ? ring_exact_div(t, *prev) : std::move(t);
      }
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Resultant in the energy variable via the Sylvester matrix, eliminated
// fraction-free over the parameter polynomial ring.
Poly sylvester_resultant(const Poly2& p, const Poly2& q);

// Disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p). Works for non-monic p: the
// division by the leading coefficient is always exact. Degree must be >= 2.
Poly discriminant(const Poly2& p);

// Same operations for a univariate polynomial with scalar coefficients.
GRat sylvester_resultant(const Poly& p, const Poly& q);
GRat discriminant(const Poly& p);

}  // namespace qhchain
