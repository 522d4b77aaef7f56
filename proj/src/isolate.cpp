#include "qhchain/isolate.hpp"

#include <algorithm>
#include <deque>

namespace qhchain {

namespace {

// Rescale by a positive rational so coefficients become coprime integers.
// Signs (all that Sturm theory needs) are unchanged.
Poly normalize_positive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.re.get_den().get_mpz_t());
  mpz_class gcd_num = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class scaled = c.re.get_num() * (lcm_den / c.re.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(lcm_den, gcd_num);
  scale.canonicalize();
  return p * GRat(scale);
}

int sign_at(const Poly& p, const Rational& x) {
  GRat v = p.eval(GRat(x));
  return rat_sign(v.re);
}

// Strict upper bound on root magnitudes: 1 + max |a_k / a_n|.
Rational root_bound(const Poly& p) {
  Rational top = 0;
  Rational lead = rat_abs(p.lc().re);
  for (int k = 0; k < p.degree(); ++k) {
    Rational t = rat_abs(p.coeff(static_cast<std::size_t>(k)).re) / lead;
    if (t > top) top = t;
  }
  return top + 1;
}

// Split point inside (lo, hi) avoiding roots of g. A square-free g has
// finitely many roots, so scanning interior grid points terminates.
Rational nonroot_split(const Poly& g, const Rational& lo, const Rational& hi) {
  for (long denom = 2;; denom *= 2) {
    for (long j = 1; j < denom; j += 2) {
      Rational m = lo + (hi - lo) * Rational(j, denom);
      if (sign_at(g, m) != 0) return m;
    }
  }
}

// Bisect a single-root interval (endpoints are non-roots, signs differ) down
// to `width`, recognizing rational roots along the way.
RealRoot refine_single(const Poly& g, Rational lo, Rational hi,
                       const Rational& width) {
  int slo = sign_at(g, lo);
  while (hi - lo > width) {
    Rational m = (lo + hi) / 2;
    int sm = sign_at(g, m);
    if (sm == 0) {
      RealRoot r{m, m, m, 1, rat_double(m), g};
      return r;
    }
    if (sm == slo)
      lo = m;
    else
      hi = m;
  }
  Rational cand = simplest_between(lo, hi);
  if (sign_at(g, cand) == 0) {
    RealRoot r{cand, cand, cand, 1, rat_double(cand), g};
    return r;
  }
  RealRoot r{lo, hi, std::nullopt, 1, rat_double((lo + hi) / 2), g};
  return r;
}

// All roots of a square-free polynomial with real rational coefficients.
std::vector<RealRoot> isolate_squarefree(const Poly& g_in, const Rational& width) {
  std::vector<RealRoot> out;
  Poly g = normalize_positive(g_in);
  if (g.degree() < 1) return out;
  if (g.degree() == 1) {
    Rational root = -(g.coeff(0).re / g.coeff(1).re);
    out.push_back({root, root, root, 1, rat_double(root), g});
    return out;
  }

  std::vector<Poly> chain = sturm_chain(g);
  Rational bound = root_bound(g);
  struct Segment {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::deque<Segment> work;
  work.push_back({-bound, bound, sturm_sign_changes(chain, -bound),
                  sturm_sign_changes(chain, bound)});
  while (!work.empty()) {
    Segment s = work.front();
    work.pop_front();
    int count = s.vlo - s.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back(refine_single(g, s.lo, s.hi, width));
      continue;
    }
    Rational m = nonroot_split(g, s.lo, s.hi);
    int vm = sturm_sign_changes(chain, m);
    work.push_back({s.lo, m, s.vlo, vm});
    work.push_back({m, s.hi, vm, s.vhi});
  }
  return out;
}

// One bisection step on an interval root; may discover the root is rational.
void bisect_step(RealRoot& r) {
  if (r.is_exact()) return;
  const Poly& g = r.isolating_poly;
  Rational m = (r.lo + r.hi) / 2;
  int sm = sign_at(g, m);
  if (sm == 0) {
    r.exact = m;
    r.lo = r.hi = m;
  } else if (sm == sign_at(g, r.lo)) {
    r.lo = m;
  } else {
    r.hi = m;
  }
  r.approx = rat_double(r.midpoint());
}

}  // namespace

Rational default_isolation_width() {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, 40);
  return Rational(1, d);
}

std::vector<Poly> sturm_chain(const Poly& square_free) {
  std::vector<Poly> chain;
  chain.push_back(normalize_positive(square_free));
  chain.push_back(normalize_positive(square_free.derivative()));
  while (!chain.back().is_zero()) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly q, r;
    Poly::divrem(a, b, q, r);
    if (r.is_zero()) break;
    chain.push_back(normalize_positive(-r));
  }
  return chain;
}

int sturm_sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::vector<SquareFreeFactor> square_free_factors(const Poly& f) {
  std::vector<SquareFreeFactor> out;
  Poly p = f.monic();
  if (p.degree() < 1) return out;
  // Yun's algorithm over a characteristic-zero field.
  Poly d = p.derivative();
  Poly g = Poly::gcd(p, d);
  Poly c = p.divide_exact(g);
  Poly w = d.divide_exact(g) - c.derivative();
  int power = 1;
  while (c.degree() > 0) {
    Poly a = Poly::gcd(c, w);
    if (a.degree() > 0) out.push_back({a.monic(), power});
    c = c.divide_exact(a);
    w = w.divide_exact(a) - c.derivative();
    ++power;
  }
  return out;
}

std::vector<RealRoot> isolate_real_roots(const Poly& f) {
  return isolate_real_roots(f, default_isolation_width());
}

std::vector<RealRoot> isolate_real_roots(const Poly& f, const Rational& width) {
  if (f.is_zero()) throw UsageError("root isolation of the zero polynomial");
  if (!f.real_coeffs())
    throw UsageError("root isolation needs real coefficients");
  std::vector<RealRoot> out;
  for (const auto& factor : square_free_factors(f)) {
    auto roots = isolate_squarefree(factor.poly, width);
    for (auto& r : roots) {
      r.multiplicity = factor.power;
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    return a.midpoint() < b.midpoint();
  });
  // Roots from different square-free factors are distinct; keep bisecting
  // overlapping intervals until the list is strictly increasing.
  bool touched = true;
  while (touched) {
    touched = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      RealRoot& a = out[i];
      RealRoot& b = out[i + 1];
      if (a.hi < b.lo) continue;
      if (a.is_exact() && b.is_exact()) continue;  // distinct exact points
      touched = true;
      if (!a.is_exact() && (b.is_exact() || a.hi - a.lo >= b.hi - b.lo))
        bisect_step(a);
      else
        bisect_step(b);
    }
    if (touched)
      std::sort(out.begin(), out.end(),
                [](const RealRoot& x, const RealRoot& y) {
                  return x.midpoint() < y.midpoint();
                });
  }
  return out;
}

int compare_root(RealRoot& root, const Rational& point) {
  if (root.is_exact()) return rat_sign(*root.exact - point) ;
  if (point <= root.lo) return 1;
  if (point >= root.hi) return -1;
  const Poly& g = root.isolating_poly;
  GRat at_point = g.eval(GRat(point));
  if (at_point.re == 0 && at_point.im == 0) {
    root.exact = point;
    root.lo = root.hi = point;
    root.approx = rat_double(point);
    return 0;
  }
  int slo = sign_at(g, root.lo);
  int sp = rat_sign(at_point.re);
  if (sp != slo) {
    root.hi = point;  // root lies in (lo, point)
    root.approx = rat_double((root.lo + root.hi) / 2);
    return -1;
  }
  root.lo = point;  // root lies in (point, hi)
  root.approx = rat_double((root.lo + root.hi) / 2);
  return 1;
}

}  // namespace qhchain
