#pragma once

#include <optional>
#include <vector>

#include "qhchain/poly.hpp"

namespace qhchain {

// One isolated real root. Either `exact` is set (and lo == hi == value), or
// [lo, hi] is an isolating interval with sign change at the endpoints.
// `isolating_poly` is the square-free factor the root belongs to; it allows
// later interval refinement.
struct RealRoot {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
  int multiplicity = 1;
  double approx = 0.0;
  Poly isolating_poly;

  bool is_exact() const { return exact.has_value(); }
  Rational midpoint() const { return exact ? *exact : (lo + hi) / 2; }
};

// Default isolating-interval width: 2^-40.
Rational default_isolation_width();

// All real roots of a rational-coefficient polynomial, each with exact
// multiplicity. Square-free factorization first, then Sturm bisection per
// factor; rational roots are recognized exactly. Intervals are pairwise
// disjoint and sorted ascending. Throws UsageError on the zero polynomial or
// complex coefficients.
std::vector<RealRoot> isolate_real_roots(const Poly& f);
std::vector<RealRoot> isolate_real_roots(const Poly& f, const Rational& width);

// Square-free decomposition f = lc * prod factors[i].poly^factors[i].power
// with pairwise coprime monic square-free factors (Yun's algorithm).
struct SquareFreeFactor {
  Poly poly;
  int power;
};
std::vector<SquareFreeFactor> square_free_factors(const Poly& f);

// Narrows the root's interval until `point` is strictly outside or the root
// is exact. Returns -1, 0, +1 comparing root to point.
int compare_root(RealRoot& root, const Rational& point);

// Number of sign changes in the Sturm chain of f evaluated at x.
int sturm_sign_changes(const std::vector<Poly>& chain, const Rational& x);
std::vector<Poly> sturm_chain(const Poly& square_free);

}  // namespace qhchain
