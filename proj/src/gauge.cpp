#include "qhchain/gauge.hpp"

#include <cmath>
#include <limits>

namespace qhchain {

namespace {

// Bond data in cyclic order: u_j = H_{j,j+1}, l_j = H_{j+1,j} for the chain
// bonds, and under periodic boundary one extra bond through the corner with
// u = H_{N,1}, l = H_{1,N} (so its ratio conj(l)/u = conj(H_{1,N})/H_{N,1}).
struct Bonds {
  bool exact = false;
  std::size_t count = 0;
  std::vector<GRat> ue, le;
  std::vector<std::complex<double>> ud, ld;
};

Bonds collect_bonds(const ChainModel& m, std::optional<Rational> param) {
  m.validate();
  Bonds b;
  b.exact = m.exact();
  std::size_t nb = static_cast<std::size_t>(m.n - 1) + (m.pbc() ? 1 : 0);
  b.count = nb;
  if (b.exact) {
    GRat x(0);
    if (m.has_parameter()) {
      if (!param) throw UsageError("model has a parameter; supply a value");
      x = GRat(*param);
    } else if (param) {
      throw UsageError("model has no parameter");
    }
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(m.n); ++j) {
      b.ue.push_back(m.upper[j].eval(x));
      b.le.push_back(m.lower[j].eval(x));
    }
    if (m.pbc()) {
      b.ue.push_back(m.corner_lower.eval(x));
      b.le.push_back(m.corner_upper.eval(x));
    }
    for (std::size_t j = 0; j < nb; ++j) {
      b.ud.push_back(b.ue[j].to_complex());
      b.ld.push_back(b.le[j].to_complex());
    }
  } else {
    if (param) throw UsageError("numeric models take no parameter value");
    b.ud = m.nupper;
    b.ld = m.nlower;
    if (m.pbc()) {
      b.ud.push_back(m.ncorner_lower);
      b.ld.push_back(m.ncorner_upper);
    }
  }
  return b;
}

RatioInfo classify_bond(const Bonds& b, std::size_t j, double tol) {
  RatioInfo info;
  if (b.exact) {
    const GRat& u = b.ue[j];
    const GRat& l = b.le[j];
    if (u.is_zero() && l.is_zero()) {
      info.flag = RatioFlag::Decoupled;
      return info;
    }
    if (u.is_zero()) {
      info.flag = RatioFlag::Undefined;
      return info;
    }
    GRat r = l.conj() / u;
    info.exact = r;
    info.has_exact = true;
    info.approx = r.to_complex();
    if (!r.is_real())
      info.flag = RatioFlag::Complex;
    else
      info.flag = rat_sign(r.re) > 0 ? RatioFlag::RealPositive
                                     : RatioFlag::RealNonPositive;
    return info;
  }
  std::complex<double> u = b.ud[j];
  std::complex<double> l = b.ld[j];
  if (u == std::complex<double>(0.0, 0.0)) {
    info.flag = (l == std::complex<double>(0.0, 0.0)) ? RatioFlag::Decoupled
                                                      : RatioFlag::Undefined;
    return info;
  }
  std::complex<double> r = std::conj(l) / u;
  info.approx = r;
  double scale = std::max(1.0, std::abs(r));
  if (std::abs(r.imag()) > tol * scale)
    info.flag = RatioFlag::Complex;
  else
    info.flag = r.real() > tol * scale ? RatioFlag::RealPositive
                                       : RatioFlag::RealNonPositive;
  return info;
}

bool bond_hermitian(const Bonds& b, std::size_t j, double tol) {
  if (b.exact) return b.le[j] == b.ue[j].conj();
  std::complex<double> d = b.ld[j] - std::conj(b.ud[j]);
  double scale = std::max({1.0, std::abs(b.ud[j]), std::abs(b.ld[j])});
  return std::abs(d) <= tol * scale;
}

std::string bond_reason(RatioFlag f, int bond) {
  std::string where = "bond " + std::to_string(bond);
  switch (f) {
    case RatioFlag::Undefined:
      return where + ": forward hop vanishes while the reverse does not";
    case RatioFlag::RealNonPositive:
      return where + ": ratio is real but not positive";
    case RatioFlag::Complex:
      return where + ": ratio is not real";
    default:
      return where;
  }
}

}  // namespace

std::vector<RatioInfo> compute_ratios(const ChainModel& model,
                                      std::optional<Rational> param,
                                      double tol) {
  Bonds b = collect_bonds(model, param);
  std::vector<RatioInfo> out;
  for (std::size_t j = 0; j < b.count; ++j)
    out.push_back(classify_bond(b, j, tol));
  return out;
}

GaugeReport build_gauge(const ChainModel& model, std::optional<Rational> param,
                        double tol) {
  Bonds b = collect_bonds(model, param);
  GaugeReport rep;
  for (std::size_t j = 0; j < b.count; ++j)
    rep.ratios.push_back(classify_bond(b, j, tol));

  for (std::size_t j = 0; j < b.count; ++j) {
    RatioFlag f = rep.ratios[j].flag;
    if (f == RatioFlag::Undefined || f == RatioFlag::RealNonPositive ||
        f == RatioFlag::Complex) {
      rep.verdict = GaugeVerdict::NotQuasiHermitian;
      rep.witness = static_cast<int>(j) + 1;
      rep.reason = bond_reason(f, rep.witness);
      return rep;
    }
  }

  std::size_t n = static_cast<std::size_t>(model.n);
  std::vector<std::size_t> cuts;  // decoupled bond indices
  for (std::size_t j = 0; j < b.count; ++j)
    if (rep.ratios[j].flag == RatioFlag::Decoupled) cuts.push_back(j);

  bool cyclic = model.pbc();
  if (cyclic && cuts.empty()) {
    // One unbroken loop: a positive gauge closes up iff the ratio product
    // (the loop holonomy) is exactly 1.
    rep.holonomy_checked = true;
    if (b.exact) {
      GRat prod(1);
      for (std::size_t j = 0; j < b.count; ++j) prod *= rep.ratios[j].exact;
      rep.holonomy_ok = prod == GRat(1);
    } else {
      std::complex<double> prod(1.0, 0.0);
      for (std::size_t j = 0; j < b.count; ++j) prod *= rep.ratios[j].approx;
      rep.holonomy_ok = std::abs(prod - std::complex<double>(1.0, 0.0)) <=
                        tol * static_cast<double>(b.count);
    }
    if (!rep.holonomy_ok) {
      rep.verdict = GaugeVerdict::NotQuasiHermitian;
      rep.witness = static_cast<int>(b.count);
      rep.reason = "ring ratio product differs from 1";
      return rep;
    }
  }

  // Weights. Bond j joins site j to site (j+1) mod n; each decoupled bond
  // starts a fresh block with weight 1.
  std::vector<Rational> q2(n, Rational(1));
  std::vector<double> q2d(n, 1.0);
  auto ratio_real = [&](std::size_t j) {
    return b.exact ? rat_double(rep.ratios[j].exact.re)
                   : rep.ratios[j].approx.real();
  };
  auto is_cut = [&](std::size_t bond) {
    return rep.ratios[bond].flag == RatioFlag::Decoupled;
  };
  std::size_t start = 0;
  if (cyclic && !cuts.empty()) start = (cuts.back() + 1) % n;
  for (std::size_t step = 0; step + 1 < n || (cyclic && step + 1 == n); ++step) {
    std::size_t site = (start + step) % n;
    std::size_t bond = site;  // bond out of `site`
    if (bond >= b.count) break;
    std::size_t next = (site + 1) % n;
    if (next == start) break;
    if (is_cut(bond)) {
      q2[next] = 1;
      q2d[next] = 1.0;
    } else {
      q2d[next] = q2d[site] * ratio_real(bond);
      if (b.exact) q2[next] = q2[site] * rep.ratios[bond].exact.re;
    }
  }
  if (start != 0) {
    // Rescale the block containing site 0 so Q_1 = 1; the overall scale of
    // each block is free.
    std::vector<std::size_t> block{0};
    for (std::size_t s = 0; s + 1 < n; ++s) {
      std::size_t left_bond = (block.front() + n - 1) % n;
      if (left_bond >= b.count || is_cut(left_bond)) break;
      std::size_t prev = (block.front() + n - 1) % n;
      if (prev == 0) break;
      block.insert(block.begin(), prev);
    }
    for (std::size_t s = 0; s + 1 < n; ++s) {
      std::size_t right_bond = block.back();
      if (right_bond >= b.count || is_cut(right_bond)) break;
      std::size_t nx = (block.back() + 1) % n;
      if (nx == 0) break;
      block.push_back(nx);
    }
    Rational f = q2[0];
    double fd = q2d[0];
    for (std::size_t s : block) {
      if (b.exact) q2[s] /= f;
      q2d[s] /= fd;
    }
  }

  if (b.exact) rep.q_squared = q2;
  rep.q.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    rep.q[j] = std::sqrt(b.exact ? rat_double(q2[j]) : q2d[j]);

  for (std::size_t j = 0; j + 1 < n; ++j) {
    rep.upper_t.push_back(b.ud[j] * (rep.q[j + 1] / rep.q[j]));
    rep.lower_t.push_back(b.ld[j] * (rep.q[j] / rep.q[j + 1]));
  }
  if (cyclic) {
    rep.corner_upper_t = b.ld[n - 1] * (rep.q[n - 1] / rep.q[0]);
    rep.corner_lower_t = b.ud[n - 1] * (rep.q[0] / rep.q[n - 1]);
  }

  bool hermitian = true;
  for (std::size_t j = 0; j < b.count && hermitian; ++j)
    if (!is_cut(j)) hermitian = bond_hermitian(b, j, tol);
  rep.verdict = hermitian ? GaugeVerdict::Hermitian : GaugeVerdict::QuasiHermitian;
  return rep;
}

Certificate check_quasi_hermitian(const ChainModel& model,
                                  std::optional<Rational> param, double tol) {
  GaugeReport g = build_gauge(model, param, tol);
  Certificate cert;
  if (g.verdict == GaugeVerdict::NotQuasiHermitian) {
    cert.holds = false;
    cert.residual = std::numeric_limits<double>::infinity();
    cert.note = "no positive gauge: " + g.reason;
    return cert;
  }
  std::size_t n = static_cast<std::size_t>(model.n);
  if (model.exact()) {
    auto h = model.dense_exact(param);
    cert.holds = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        GRat lhs = GRat(g.q_squared[i]) * h[j][i].conj();
        GRat rhs = h[i][j] * GRat(g.q_squared[j]);
        if (!(lhs == rhs)) {
          if (cert.holds) {
            cert.row = static_cast<int>(i);
            cert.col = static_cast<int>(j);
          }
          cert.holds = false;
          std::complex<double> d = lhs.to_complex() - rhs.to_complex();
          cert.residual = std::max(cert.residual, std::abs(d));
        }
      }
    return cert;
  }
  Eigen::MatrixXcd h = model.dense_numeric(std::nullopt);
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double q2i = g.q[i] * g.q[i];
      double q2j = g.q[j] * g.q[j];
      std::complex<double> d =
          q2i * std::conj(h(static_cast<int>(j), static_cast<int>(i))) -
          h(static_cast<int>(i), static_cast<int>(j)) * q2j;
      if (std::abs(d) > worst) {
        worst = std::abs(d);
        cert.row = static_cast<int>(i);
        cert.col = static_cast<int>(j);
      }
    }
  cert.residual = worst / scale;
  cert.holds = cert.residual <= tol;
  if (cert.holds) {
    cert.row = -1;
    cert.col = -1;
  }
  return cert;
}

RatFunc pbc_reality_corner(const ChainModel& model) {
  model.validate();
  if (!model.pbc())
    throw UsageError("ring closure entry needs a periodic model");
  if (!model.exact())
    throw UsageError("symbolic ring closure needs exact entries");
  RatFunc acc{Poly(1)};
  for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(model.n); ++j) {
    const Poly& u = model.upper[j].num;
    const Poly& l = model.lower[j].num;
    if (u.is_zero())
      throw ComputeError("bond " + std::to_string(j + 1) +
                         ": ratio undefined (forward hop vanishes)");
    acc = acc * RatFunc(l.conjugated(), u);
  }
  acc = acc * model.corner_upper.conjugated();
  return acc.normalized();
}

std::string verdict_name(GaugeVerdict v) {
  switch (v) {
    case GaugeVerdict::Hermitian: return "hermitian";
    case GaugeVerdict::QuasiHermitian: return "quasi_hermitian";
    default: return "not_quasi_hermitian";
  }
}

std::string ratio_flag_name(RatioFlag f) {
  switch (f) {
    case RatioFlag::RealPositive: return "real_positive";
    case RatioFlag::RealNonPositive: return "real_nonpositive";
    case RatioFlag::Complex: return "complex";
    case RatioFlag::Undefined: return "undefined";
    default: return "decoupled";
  }
}

}  // namespace qhchain
