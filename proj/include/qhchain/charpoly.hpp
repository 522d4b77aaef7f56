#pragma once

#include <optional>

#include "qhchain/model.hpp"
#include "qhchain/poly.hpp"

namespace qhchain {

// Characteristic polynomial det(E*I - H) of a chain model, kept symbolic in
// both E and the model parameter. When the ring-closure entries carry a
// denominator the determinant is a rational function of the parameter; we
// store the cleared form instead:
//
//   det(E*I - H(x)) = poly(E, x) / denom(x)
//
// so the roots of denom are exactly the parameter values where the model
// itself is undefined. For plain polynomial entries denom == 1 and poly is
// monic in E.
struct CharPoly {
  Poly2 poly;
  Poly denom;

  // Monic polynomial in E at a concrete parameter value.
  Poly at(const GRat& param) const;
};

CharPoly char_poly(const ChainModel& model);

// Monic det(E*I - H) at a concrete parameter value (nullopt when the model
// has no parameter).
Poly char_poly_at(const ChainModel& model, std::optional<Rational> param);

// Independent cross-check: cofactor-free determinant of the full dense
// matrix by fraction-free elimination. Slow on purpose; capped at 12 sites.
Poly2 brute_char_poly(const ChainModel& model);
Poly brute_char_poly_at(const ChainModel& model, std::optional<Rational> param);

}  // namespace qhchain
