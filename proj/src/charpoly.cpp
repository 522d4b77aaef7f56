#include "qhchain/charpoly.hpp"

#include "qhchain/det.hpp"

namespace qhchain {

namespace {

Poly2 lift(const Poly& p) {
  if (p.is_zero()) return Poly2();
  return Poly2(std::vector<Poly>{p});
}

// Determinant of the tridiagonal block of E*I - H restricted to sites
// [from, to] (1-based, inclusive), via the three-term recurrence
//   D_k = (E - a_k) D_{k-1} - u_{k-1} l_{k-1} D_{k-2}.
Poly2 tridiag_det(const ChainModel& m, int from, int to) {
  Poly2 prev2 = Poly2(1);  // empty product
  if (from > to) return prev2;
  Poly2 e = Poly2::energy();
  Poly2 prev1 = e - lift(m.diag[static_cast<std::size_t>(from - 1)].as_poly());
  for (int k = from + 1; k <= to; ++k) {
    std::size_t bond = static_cast<std::size_t>(k - 2);
    Poly2 diag_term = e - lift(m.diag[static_cast<std::size_t>(k - 1)].as_poly());
    Poly2 hop = lift(m.upper[bond].as_poly() * m.lower[bond].as_poly());
    Poly2 next = diag_term * prev1 - hop * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

}  // namespace

Poly CharPoly::at(const GRat& param) const {
  GRat d = denom.eval(param);
  if (d.is_zero())
    throw ComputeError("parameter value hits a pole of the model");
  return poly.at_param(param) * (GRat(1) / d);
}

CharPoly char_poly(const ChainModel& model) {
  model.validate();
  if (!model.exact())
    throw UsageError("characteristic polynomial needs exact entries");
  CharPoly out;
  Poly2 d_full = tridiag_det(model, 1, model.n);
  if (!model.pbc()) {
    out.poly = d_full;
    out.denom = Poly(1);
    return out;
  }
  // det = D_N - c_1n c_n1 D_mid - c_n1 prod(u) - c_1n prod(l), with the
  // corner denominators cleared:
  //   d1 d2 det = d1 d2 D_N - n1 n2 D_mid - d1 n2 prod(u) - d2 n1 prod(l)
  const Poly& n1 = model.corner_upper.num;
  const Poly& d1 = model.corner_upper.den;
  const Poly& n2 = model.corner_lower.num;
  const Poly& d2 = model.corner_lower.den;
  Poly2 d_mid = tridiag_det(model, 2, model.n - 1);
  Poly prod_u(1), prod_l(1);
  for (int j = 0; j + 1 < model.n; ++j) {
    prod_u = prod_u * model.upper[static_cast<std::size_t>(j)].as_poly();
    prod_l = prod_l * model.lower[static_cast<std::size_t>(j)].as_poly();
  }
  out.poly = lift(d1 * d2) * d_full - lift(n1 * n2) * d_mid -
             lift(d1 * n2 * prod_u) - lift(d2 * n1 * prod_l);
  out.denom = d1 * d2;
  return out;
}

Poly char_poly_at(const ChainModel& model, std::optional<Rational> param) {
  CharPoly cp = char_poly(model);
  if (model.has_parameter()) {
    if (!param) throw UsageError("model has a parameter; supply a value");
    return cp.at(GRat(*param));
  }
  if (param) throw UsageError("model has no parameter");
  return cp.at(GRat(0));
}

Poly2 brute_char_poly(const ChainModel& model) {
  model.validate();
  if (!model.exact())
    throw UsageError("characteristic polynomial needs exact entries");
  if (model.n > 12)
    throw UsageError("brute-force determinant is capped at 12 sites");
  if (model.pbc() &&
      (!model.corner_upper.is_poly() || !model.corner_lower.is_poly()))
    throw UsageError("brute-force path needs polynomial corner entries");
  std::size_t un = static_cast<std::size_t>(model.n);
  std::vector<std::vector<Poly2>> m(un, std::vector<Poly2>(un, Poly2()));
  Poly2 e = Poly2::energy();
  for (std::size_t j = 0; j < un; ++j)
    m[j][j] = e - lift(model.diag[j].as_poly());
  for (std::size_t j = 0; j + 1 < un; ++j) {
    m[j][j + 1] = Poly2() - lift(model.upper[j].as_poly());
    m[j + 1][j] = Poly2() - lift(model.lower[j].as_poly());
  }
  if (model.pbc()) {
    m[0][un - 1] = m[0][un - 1] - lift(model.corner_upper.as_poly());
    m[un - 1][0] = m[un - 1][0] - lift(model.corner_lower.as_poly());
  }
  return bareiss_det(m);
}

Poly brute_char_poly_at(const ChainModel& model,
                        std::optional<Rational> param) {
  model.validate();
  if (!model.exact())
    throw UsageError("characteristic polynomial needs exact entries");
  if (model.n > 12)
    throw UsageError("brute-force determinant is capped at 12 sites");
  auto dense = model.dense_exact(param);
  std::size_t un = dense.size();
  std::vector<std::vector<Poly>> m(un, std::vector<Poly>(un, Poly()));
  Poly e = Poly::variable();
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      Poly entry = Poly(GRat() - dense[i][j]);
      if (i == j) entry = entry + e;
      m[i][j] = std::move(entry);
    }
  return bareiss_det(m);
}

}  // namespace qhchain
