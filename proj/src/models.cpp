#include "qhchain/models.hpp"

#include <algorithm>

#include "qhchain/charpoly.hpp"

namespace qhchain {

namespace {

RatFunc linear(const Rational& c0, const Rational& c1) {
  return RatFunc(Poly(std::vector<GRat>{GRat(c0), GRat(c1)}));
}

}  // namespace

ChainModel build_roccati(const RoccatiSpec& spec) {
  if (spec.n < 2) throw UsageError("chain needs at least 2 sites");
  if (spec.j == 0) throw UsageError("hop scale must be nonzero");
  bool ring = spec.variant != RoccatiSpec::Variant::Obc;
  if (ring && spec.n < 3) throw UsageError("ring variants need at least 3 sites");
  if (spec.variant == RoccatiSpec::Variant::PbcCorrected && spec.delta &&
      *spec.delta == 1)
    throw UsageError("corrected ring closure has a pole at delta = 1");

  ChainModel m;
  m.n = spec.n;
  m.boundary = ring ? Boundary::Pbc : Boundary::Obc;
  m.kind = EntryKind::Exact;

  const Rational& j = spec.j;
  RatFunc fwd, bwd;  // J(1 - d) forward, J(1 + d) backward
  if (spec.delta) {
    fwd = RatFunc(GRat(j * (1 - *spec.delta)));
    bwd = RatFunc(GRat(j * (1 + *spec.delta)));
  } else {
    m.parameter = "delta";
    fwd = linear(j, -j);
    bwd = linear(j, j);
  }
  for (int k = 0; k < spec.n; ++k) m.diag.emplace_back();
  for (int k = 0; k + 1 < spec.n; ++k) {
    m.upper.push_back(fwd);
    m.lower.push_back(bwd);
  }
  if (ring) {
    m.corner_upper = bwd;  // H_{1,N} continues the backward pattern
    if (spec.variant == RoccatiSpec::Variant::PbcNaive) {
      m.corner_lower = fwd;  // H_{N,1} repeats the bulk forward hop
    } else {
      // H_{N,1} = J (1+d)^N / (1-d)^{N-1}
      unsigned long nn = static_cast<unsigned long>(spec.n);
      if (spec.delta) {
        Rational num = j * rat_pow(1 + *spec.delta, nn);
        Rational den = rat_pow(1 - *spec.delta, nn - 1);
        m.corner_lower = RatFunc(GRat(num / den));
      } else {
        Poly up = Poly(std::vector<GRat>{GRat(1), GRat(1)}).pow(nn) * GRat(j);
        Poly dn = Poly(std::vector<GRat>{GRat(1), GRat(-1)}).pow(nn - 1);
        m.corner_lower = RatFunc(std::move(up), std::move(dn));
      }
    }
  }
  m.validate();
  return m;
}

ChainModel build_yr(const YRSpec& spec) {
  if (spec.n < 2) throw UsageError("chain needs at least 2 sites");
  int bond = spec.bond < 0 ? spec.n - 1 : spec.bond;
  if (bond < 1 || bond > spec.n - 1)
    throw UsageError("perturbed bond index out of range");
  std::vector<Rational> t = spec.t;
  if (t.empty()) t.assign(static_cast<std::size_t>(spec.n - 1), Rational(1));
  if (static_cast<int>(t.size()) != spec.n - 1)
    throw UsageError("forward hop list must have N-1 entries");
  for (const Rational& tv : t)
    if (tv == 0) throw UsageError("forward hops must be nonzero");
  if (spec.j_override &&
      static_cast<int>(spec.j_override->size()) != spec.n - 1)
    throw UsageError("reverse hop list must have N-1 entries");

  ChainModel m;
  m.n = spec.n;
  m.boundary = Boundary::Obc;
  m.kind = EntryKind::Exact;
  if (!spec.gamma) m.parameter = "gamma";
  for (int k = 0; k < spec.n; ++k) m.diag.emplace_back(GRat(spec.beta));
  for (int k = 0; k + 1 < spec.n; ++k) {
    std::size_t uk = static_cast<std::size_t>(k);
    m.upper.emplace_back(GRat(t[uk]));
    if (k + 1 == bond) {
      if (spec.gamma)
        m.lower.emplace_back(GRat(t[uk] - *spec.gamma));
      else
        m.lower.push_back(linear(t[uk], Rational(-1)));
    } else {
      Rational rev = spec.j_override ? (*spec.j_override)[uk] : t[uk];
      m.lower.emplace_back(GRat(rev));
    }
  }
  m.validate();
  return m;
}

bool same_real_root(const RealRoot& a, const RealRoot& b) {
  RealRoot ra = a, rb = b;
  if (ra.is_exact() && rb.is_exact()) return *ra.exact == *rb.exact;
  if (ra.is_exact()) return compare_root(rb, *ra.exact) == 0;
  if (rb.is_exact()) return compare_root(ra, *rb.exact) == 0;
  Rational lo = std::max(ra.lo, rb.lo);
  Rational hi = std::min(ra.hi, rb.hi);
  if (!(lo < hi)) return false;
  Poly g = Poly::gcd(ra.isolating_poly, rb.isolating_poly);
  if (g.degree() < 1) return false;
  int slo = rat_sign(g.eval(GRat(lo)).re);
  int shi = rat_sign(g.eval(GRat(hi)).re);
  if (slo == 0 || shi == 0) return true;  // endpoint hit the shared root
  return slo * shi < 0;
}

bool beta_shift_check(const YRSpec& spec, const Rational& beta1,
                      const Rational& beta2) {
  YRSpec s1 = spec;
  s1.beta = beta1;
  YRSpec s2 = spec;
  s2.beta = beta2;
  EPReport r1 = find_eps(build_yr(s1));
  EPReport r2 = find_eps(build_yr(s2));

  auto locations = [](const EPReport& r) {
    std::vector<RealRoot> locs;
    for (const EPCandidate& c : r.candidates) {
      if (!locs.empty() && same_real_root(locs.back(), c.location)) continue;
      locs.push_back(c.location);
    }
    return locs;
  };
  std::vector<RealRoot> l1 = locations(r1), l2 = locations(r2);
  if (l1.size() != l2.size()) return false;
  for (std::size_t k = 0; k < l1.size(); ++k)
    if (!same_real_root(l1[k], l2[k])) return false;
  return true;
}

InvertibilityReport invertibility_check(const YRSpec& spec) {
  if (spec.beta != 0)
    throw UsageError("invertibility study is defined for zero diagonal");
  ChainModel m = build_yr(spec);
  CharPoly cp = char_poly(m);
  // det H = (-1)^N * (char poly at E = 0)
  Poly det = cp.poly.at_energy(GRat(0));
  if (m.n % 2 != 0) det = -det;
  InvertibilityReport rep;
  rep.det = det;
  rep.identically_zero = det.is_zero();
  if (!rep.identically_zero && det.degree() >= 1 && det.real_coeffs())
    rep.singular_params = isolate_real_roots(det);
  return rep;
}

}  // namespace qhchain
