#include "qhchain/exceptional.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qhchain/aberth.hpp"
#include "qhchain/charpoly.hpp"
#include "qhchain/det.hpp"
#include "qhchain/linalg.hpp"
#include "qhchain/rng.hpp"
#include "qhchain/spectral.hpp"

namespace qhchain {

namespace {

struct FactorRoot {
  std::complex<double> value;
  bool real = false;
  bool exact = false;
  Rational rational{};
};

// All roots of a square-free polynomial: real ones from exact isolation,
// complex pairs numerically.
std::vector<FactorRoot> square_free_roots(const Poly& f) {
  std::vector<FactorRoot> out;
  std::vector<RealRoot> rr;
  if (f.real_coeffs()) {
    rr = isolate_real_roots(f);
    for (const RealRoot& r : rr) {
      FactorRoot fr;
      fr.value = {r.approx, 0.0};
      fr.real = true;
      if (r.is_exact()) {
        fr.exact = true;
        fr.rational = *r.exact;
      }
      out.push_back(fr);
    }
    if (static_cast<int>(rr.size()) == f.degree()) return out;
  }
  std::vector<std::complex<double>> ab = aberth_roots(complex_coeffs(f));
  double scale = 1.0;
  for (auto z : ab) scale = std::max(scale, std::abs(z));
  std::vector<bool> used(ab.size(), false);
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
    if (best < ab.size() && bestd <= 1e-6 * scale) used[best] = true;
  }
  for (std::size_t k = 0; k < ab.size(); ++k) {
    if (used[k]) continue;
    FactorRoot fr;
    fr.value = ab[k];
    fr.real = std::abs(ab[k].imag()) <= 1e-9 * scale;
    out.push_back(fr);
  }
  return out;
}

// Real-coefficient polynomial with the same real zero set. For complex
// coefficients a real root must kill the real and imaginary parts at once.
Poly real_root_carrier(const Poly& p) {
  if (p.real_coeffs()) return p;
  std::vector<GRat> re, im;
  for (const GRat& c : p.coeffs()) {
    re.push_back(GRat(c.re));
    im.push_back(GRat(c.im));
  }
  return Poly::gcd(Poly(std::move(re)), Poly(std::move(im)));
}

bool root_on_locus(RealRoot root, const Poly& locus) {
  if (locus.degree() < 1) return false;
  Poly carrier = real_root_carrier(locus);
  if (carrier.degree() < 1) return false;
  if (root.is_exact()) return carrier.eval(GRat(*root.exact)).is_zero();
  Poly g = Poly::gcd(root.isolating_poly, carrier);
  if (g.degree() < 1) return false;
  auto sgn = [&](const Rational& x) { return rat_sign(g.eval(GRat(x)).re); };
  return sgn(root.lo) * sgn(root.hi) < 0;
}

int jordan_order_numeric(const Eigen::MatrixXcd& h, std::complex<double> e,
                         double tol) {
  Eigen::Index n = h.rows();
  Eigen::MatrixXcd m = h - e * Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd mk = Eigen::MatrixXcd::Identity(n, n);
  int prev = static_cast<int>(n);
  int order = 0;
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    mk = mk * m;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mk);
    double smax = svd.singularValues()(0);
    int rank = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (smax > 0.0 &&
          svd.singularValues()(j) > tol * smax * static_cast<double>(n))
        ++rank;
    if (rank == prev) break;
    order = k;
    prev = rank;
  }
  return order;
}

void analyze_exact_location(const ChainModel& model, const CharPoly& cp,
                            const RealRoot& loc, int root_mult,
                            std::vector<EPCandidate>& out) {
  Rational gamma = *loc.exact;
  Poly p = cp.at(GRat(gamma));
  Eigen::MatrixXcd h;
  bool have_h = false;
  for (const SquareFreeFactor& sf : square_free_factors(p)) {
    if (sf.power < 2) continue;
    for (const FactorRoot& fr : square_free_roots(sf.poly)) {
      EPCandidate c;
      c.location = loc;
      c.root_multiplicity = root_mult;
      c.eigenvalue = fr.value;
      c.algebraic_multiplicity = sf.power;
      if (fr.exact) {
        c.eigen_exact = true;
        c.eigen_rational = fr.rational;
        c.geometric_multiplicity =
            geometric_multiplicity_exact(model, gamma, GRat(fr.rational));
        c.certified = true;
        if (c.geometric_multiplicity == 1)
          c.ep_order = sf.power;
        else if (c.geometric_multiplicity == sf.power)
          c.ep_order = 1;
        else
          c.ep_order = jordan_order_exact(model, gamma, GRat(fr.rational));
      } else {
        if (!have_h) {
          h = model.dense_numeric(std::complex<double>(rat_double(gamma), 0.0));
          have_h = true;
        }
        c.geometric_multiplicity =
            geometric_multiplicity_numeric(h, fr.value);
        if (c.geometric_multiplicity == 1)
          c.ep_order = sf.power;
        else if (c.geometric_multiplicity == sf.power)
          c.ep_order = 1;
        else
          c.ep_order = jordan_order_numeric(h, fr.value, 1e-9);
      }
      c.is_ep = c.geometric_multiplicity < c.algebraic_multiplicity;
      out.push_back(std::move(c));
    }
  }
}

void analyze_interval_location(const ChainModel& model, const RealRoot& loc,
                               int root_mult, std::vector<EPCandidate>& out) {
  std::complex<double> x(loc.approx, 0.0);
  Eigen::MatrixXcd h = model.dense_numeric(x);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success)
    throw ComputeError("dense eigensolver failed to converge");
  std::vector<std::complex<double>> vals(es.eigenvalues().data(),
                                         es.eigenvalues().data() + h.rows());
  double scale = 1.0;
  for (auto v : vals) scale = std::max(scale, std::abs(v));
  // wide merge radius: at an isolated-interval root the collision is only
  // resolved to roughly the interval width
  double merge = 50.0 * std::sqrt(rat_double(loc.hi - loc.lo) + 1e-300) * scale;
  merge = std::max(merge, 1e-7 * scale);
  for (const RootCluster& cl : cluster_roots(vals, merge)) {
    if (cl.multiplicity < 2) continue;
    EPCandidate c;
    c.location = loc;
    c.root_multiplicity = root_mult;
    c.eigenvalue = cl.center;
    c.algebraic_multiplicity = cl.multiplicity;
    c.geometric_multiplicity = geometric_multiplicity_numeric(h, cl.center);
    if (c.geometric_multiplicity == 1)
      c.ep_order = cl.multiplicity;
    else if (c.geometric_multiplicity == cl.multiplicity)
      c.ep_order = 1;
    else
      c.ep_order = jordan_order_numeric(h, cl.center, 1e-9);
    c.is_ep = c.geometric_multiplicity < c.algebraic_multiplicity;
    out.push_back(std::move(c));
  }
}

}  // namespace

Poly discriminant_of_model(const ChainModel& model) {
  model.validate();
  if (!model.exact())
    throw UsageError("discriminant needs exact entries");
  if (!model.has_parameter())
    throw UsageError("discriminant needs a model parameter");
  CharPoly cp = char_poly(model);
  if (cp.poly.degree() < 2)
    throw UsageError("discriminant needs at least two eigenvalues");
  return discriminant(cp.poly);
}

EPReport find_eps(const ChainModel& model) {
  model.validate();
  if (!model.exact())
    throw UsageError("collision analysis needs exact entries");
  if (!model.has_parameter())
    throw UsageError("collision analysis needs a model parameter");
  CharPoly cp = char_poly(model);
  if (cp.poly.degree() < 2)
    throw UsageError("collision analysis needs at least two eigenvalues");

  EPReport rep;
  rep.discriminant = discriminant(cp.poly);
  rep.excluded = cp.denom;
  if (rep.discriminant.is_zero())
    throw ComputeError(
        "discriminant vanishes identically; every parameter value is degenerate");

  Poly carrier = real_root_carrier(rep.discriminant);
  if (carrier.degree() < 1) return rep;

  for (RealRoot& r : isolate_real_roots(carrier)) {
    if (root_on_locus(r, rep.excluded)) continue;
    if (r.is_exact())
      analyze_exact_location(model, cp, r, r.multiplicity, rep.candidates);
    else
      analyze_interval_location(model, r, r.multiplicity, rep.candidates);
  }
  std::sort(rep.candidates.begin(), rep.candidates.end(),
            [](const EPCandidate& a, const EPCandidate& b) {
              Rational ma = a.location.midpoint();
              Rational mb = b.location.midpoint();
              if (ma != mb) return ma < mb;
              if (a.eigenvalue.real() != b.eigenvalue.real())
                return a.eigenvalue.real() < b.eigenvalue.real();
              return a.eigenvalue.imag() < b.eigenvalue.imag();
            });
  return rep;
}

std::optional<RealRoot> first_positive_candidate(const EPReport& report) {
  for (const EPCandidate& c : report.candidates) {
    RealRoot r = c.location;
    if (compare_root(r, Rational(0)) > 0) return r;
  }
  return std::nullopt;
}

int jordan_order_exact(const ChainModel& model, std::optional<Rational> param,
                       const GRat& e) {
  auto h = model.dense_exact(param);
  std::size_t n = h.size();
  for (std::size_t j = 0; j < n; ++j) h[j][j] -= e;
  GMat mk = gmat_identity(n);
  std::size_t prev = n;
  int order = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    mk = gmat_mul(mk, h);
    std::size_t rank = gmat_rank(mk);
    if (rank == prev) break;
    order = static_cast<int>(k);
    prev = rank;
  }
  return order;
}

ChainModel robustness_trial_model(const RobustnessOptions& opt,
                                  std::uint64_t trial,
                                  std::vector<Rational>* upper_out,
                                  std::vector<Rational>* lower_out) {
  if (opt.n < 2) throw UsageError("robustness chains need at least 2 sites");
  int bond = opt.bond < 0 ? opt.n - 1 : opt.bond;
  if (bond < 1 || bond > opt.n - 1)
    throw UsageError("perturbed bond index out of range");
  if (!(opt.t_fixed > 0))
    throw UsageError("fixed hop must be positive");

  SplitMix64 rng = stream_rng(opt.seed, trial);
  ChainModel m;
  m.n = opt.n;
  m.boundary = Boundary::Obc;
  m.kind = EntryKind::Exact;
  m.parameter = "gamma";
  std::vector<Rational> ts, js;
  for (int j = 1; j < opt.n; ++j) {
    if (j == bond) {
      ts.push_back(opt.t_fixed);
      js.push_back(opt.t_fixed);  // placeholder; the bond carries t_k - gamma
      continue;
    }
    Rational t = draw_coupling(rng);
    ts.push_back(t);
    js.push_back(opt.random_lower ? draw_coupling(rng) : t);
  }
  for (int j = 0; j < opt.n; ++j) m.diag.emplace_back(Poly());
  for (int j = 0; j + 1 < opt.n; ++j) {
    m.upper.emplace_back(Poly(GRat(ts[static_cast<std::size_t>(j)])));
    if (j + 1 == bond) {
      // hop back across the perturbed bond: t_k - gamma
      m.lower.emplace_back(
          Poly(std::vector<GRat>{GRat(opt.t_fixed), GRat(-1)}));
    } else {
      m.lower.emplace_back(Poly(GRat(js[static_cast<std::size_t>(j)])));
    }
  }
  m.validate();
  if (upper_out) *upper_out = ts;
  if (lower_out) *lower_out = js;
  return m;
}

RobustnessSummary robustness_sweep(const RobustnessOptions& opt) {
  RobustnessSummary summary;
  summary.options = opt;
  for (int t = 0; t < opt.trials; ++t) {
    RobustnessTrial trial;
    ChainModel m = robustness_trial_model(opt, static_cast<std::uint64_t>(t),
                                          &trial.upper, &trial.lower);
    Poly disc = discriminant_of_model(m);
    if (disc.is_zero())
      throw ComputeError("trial discriminant vanishes identically");
    Poly carrier = real_root_carrier(disc);
    if (carrier.degree() >= 1) {
      for (RealRoot& r : isolate_real_roots(carrier)) {
        if (compare_root(r, Rational(0)) > 0) {
          trial.found = true;
          trial.gamma_ep = r;
          break;
        }
      }
    }
    if (trial.found) {
      RealRoot r = trial.gamma_ep;
      trial.satisfies_bound = compare_root(r, opt.t_fixed) >= 0;
      trial.gamma_ep = r;  // keep any refinement
      if (!trial.satisfies_bound) summary.violations++;
    } else {
      summary.violations++;
    }
    summary.trials.push_back(std::move(trial));
  }
  return summary;
}

SeriesCheck series_check(const ChainModel& model, const SeriesOptions& opt) {
  model.validate();
  if (!model.exact() || !model.has_parameter())
    throw UsageError("series study needs an exact one-parameter model");
  if (opt.points < 3) throw UsageError("series grid needs at least 3 points");
  if (!(opt.x0 > 0) || !(opt.ratio > 0) || !(opt.ratio < 1))
    throw UsageError("series grid needs 0 < ratio < 1 and x0 > 0");

  SeriesCheck out;
  out.point = opt.point;
  out.side = opt.side >= 0 ? 1 : -1;

  std::size_t nb = 0;
  Rational x = opt.x0;
  for (int i = 0; i < opt.points; ++i, x *= opt.ratio) {
    Rational param = opt.point + Rational(out.side) * x;
    SpectrumReport sp = eigen_general(model, param);
    auto vals = sp.values_with_multiplicity();
    if (nb == 0) {
      nb = vals.size();
      out.branch_values.assign(nb, {});
    } else if (vals.size() != nb) {
      throw ComputeError("eigenvalue count changed along the series grid");
    }
    double mi = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      out.branch_values[b].push_back(vals[b].real());
      mi = std::max(mi, std::abs(vals[b].imag()));
    }
    out.offsets.push_back(rat_double(x));
    out.max_imag.push_back(mi);
  }

  for (std::size_t b = 0; b < nb; ++b) {
    BranchFit fit;
    fit.branch = static_cast<int>(b);
    // least squares on log|E| vs log x over the tail of the grid
    std::vector<double> lx, ly;
    int sign_latest = 0;
    for (std::size_t i = out.offsets.size(); i-- > 0;) {
      double v = out.branch_values[b][i];
      if (std::abs(v) < 1e-13) continue;
      if (sign_latest == 0) sign_latest = v > 0 ? 1 : -1;
      lx.push_back(std::log(out.offsets[i]));
      ly.push_back(std::log(std::abs(v)));
      if (lx.size() >= 8) break;
    }
    if (lx.size() >= 3) {
      double n = static_cast<double>(lx.size());
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
      }
      double denom = n * sxx - sx * sx;
      double p = (n * sxy - sx * sy) / denom;
      double q = (sy - p * sx) / n;
      double rss = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) {
        double d = ly[i] - (q + p * lx[i]);
        rss += d * d;
      }
      fit.exponent = p;
      fit.coefficient = sign_latest * std::exp(q);
      fit.residual = std::sqrt(rss / n);
      fit.reliable = fit.residual < 0.05;
    }
    out.fits.push_back(fit);
  }
  return out;
}

}  // namespace qhchain
