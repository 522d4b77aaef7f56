#include "qhchain/det.hpp"

namespace qhchain {

namespace {

// Sylvester matrix rows: deg(q) shifted copies of p's coefficients
// (descending), then deg(p) shifted copies of q's.
template <typename Scalar, typename P>
std::vector<std::vector<Scalar>> sylvester_matrix(const P& p, const P& q) {
  const int m = p.degree();
  const int n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Scalar>> s(size, std::vector<Scalar>(size, Scalar(0)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + m - k)] =
          p.coeff(static_cast<std::size_t>(k));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + n - k)] =
          q.coeff(static_cast<std::size_t>(k));
  return s;
}

template <typename Scalar, typename P>
Scalar resultant_impl(const P& p, const P& q) {
  if (p.is_zero() || q.is_zero())
    throw UsageError("resultant of a zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return Scalar(1);
  if (p.degree() == 0) {
    // Res(c, q) = c^deg(q)
    Scalar out(1);
    for (int k = 0; k < q.degree(); ++k) out = out * p.coeff(0);
    return out;
  }
  if (q.degree() == 0) {
    Scalar out(1);
    for (int k = 0; k < p.degree(); ++k) out = out * q.coeff(0);
    return out;
  }
  return bareiss_det(sylvester_matrix<Scalar>(p, q));
}

template <typename Scalar, typename P>
Scalar discriminant_impl(const P& p) {
  const int n = p.degree();
  if (n < 2) throw UsageError("discriminant needs degree >= 2");
  Scalar res = resultant_impl<Scalar>(p, p.derivative());
  Scalar disc = ring_exact_div(res, p.lc());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

}  // namespace

Poly sylvester_resultant(const Poly2& p, const Poly2& q) {
  return resultant_impl<Poly>(p, q);
}

Poly discriminant(const Poly2& p) { return discriminant_impl<Poly>(p); }

GRat sylvester_resultant(const Poly& p, const Poly& q) {
  return resultant_impl<GRat>(p, q);
}

GRat discriminant(const Poly& p) { return discriminant_impl<GRat>(p); }

}  // namespace qhchain
