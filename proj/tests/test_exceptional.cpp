#include <cmath>

#include "doctest.h"
#include "golden.hpp"
#include "qhchain/exceptional.hpp"
#include "qhchain/models.hpp"

using namespace qhchain;

namespace {
Poly poly_from_longs(const std::vector<long long>& cs) {
  std::vector<GRat> v;
  for (long long c : cs) v.emplace_back(Rational(static_cast<long>(c)));
  return Poly(v);
}
}  // namespace

TEST_CASE("collision polynomial matches the frozen references, small sizes") {
  for (int n : {2, 3, 4, 5}) {
    YRSpec spec;
    spec.n = n;
    Poly d = discriminant_of_model(build_yr(spec));
    CHECK(d == poly_from_longs(collision_poly_coeffs().at(n)));
  }
}

TEST_CASE("five-site chain: collision at 3/2 with a one-dimensional kernel") {
  YRSpec spec;
  spec.n = 5;
  EPReport rep = find_eps(build_yr(spec));
  // exactly one real collision parameter, gamma = 3/2
  REQUIRE(rep.candidates.size() == 1);
  const EPCandidate& c = rep.candidates[0];
  REQUIRE(c.location.is_exact());
  CHECK(*c.location.exact == Rational(3, 2));
  CHECK(c.eigen_exact);
  CHECK(c.eigen_rational == Rational(0));
  CHECK(c.algebraic_multiplicity == 3);
  CHECK(c.geometric_multiplicity == 1);
  CHECK(c.ep_order == 3);
  CHECK(c.is_ep);
  CHECK(c.certified);
}

TEST_CASE("three-site chain: collision parameter 2, defective pair") {
  YRSpec spec;
  spec.n = 3;
  EPReport rep = find_eps(build_yr(spec));
  REQUIRE(rep.candidates.size() == 1);
  const EPCandidate& c = rep.candidates[0];
  REQUIRE(c.location.is_exact());
  CHECK(*c.location.exact == Rational(2));
  CHECK(c.ep_order >= 2);
  CHECK(c.is_ep);
}

TEST_CASE("even chain: the only real collision parameter is 1") {
  for (int n : {4, 6}) {
    YRSpec spec;
    spec.n = n;
    EPReport rep = find_eps(build_yr(spec));
    REQUIRE(!rep.candidates.empty());
    for (const auto& c : rep.candidates) {
      REQUIRE(c.location.is_exact());
      CHECK(*c.location.exact == Rational(1));
    }
    auto first = first_positive_candidate(rep);
    REQUIRE(first.has_value());
    CHECK(*first->exact == Rational(1));
  }
}

TEST_CASE("diabolic crossings are not flagged as defective") {
  // symmetric 2-site chain: discriminant 4 t^2 vanishes at t = 0 where the
  // matrix is diagonal (a crossing, not a defect)
  nlohmann::json d{{"n", 2},
                   {"boundary", "obc"},
                   {"parameter", "t"},
                   {"diag", {0, 0}},
                   {"upper", {nlohmann::json{{"poly", {0, 1}}}}},
                   {"lower", {nlohmann::json{{"poly", {0, 1}}}}}};
  ChainModel m = load_model(d);
  EPReport rep = find_eps(m);
  REQUIRE(rep.candidates.size() == 1);
  const EPCandidate& c = rep.candidates[0];
  CHECK(*c.location.exact == Rational(0));
  CHECK(c.algebraic_multiplicity == 2);
  CHECK(c.geometric_multiplicity == 2);
  CHECK_FALSE(c.is_ep);
  CHECK(c.ep_order == 1);
}

TEST_CASE("excluded locus drops spurious discriminant roots") {
  RoccatiSpec spec;
  spec.n = 4;
  spec.variant = RoccatiSpec::Variant::PbcCorrected;
  ChainModel m = build_roccati(spec);
  EPReport rep = find_eps(m);
  CHECK(rep.excluded.degree() > 0);
  for (auto& c : rep.candidates) {
    RealRoot r = c.location;
    CHECK(compare_root(r, Rational(1)) != 0);  // the pole never shows up
  }
  // delta = -1 is a genuine fourfold collision at E = 0
  bool found = false;
  for (const auto& c : rep.candidates) {
    if (c.location.is_exact() && *c.location.exact == Rational(-1)) {
      found = true;
      CHECK(c.algebraic_multiplicity == 4);
      CHECK(c.geometric_multiplicity == 1);
      CHECK(c.ep_order == 4);
      CHECK(c.certified);
    }
  }
  CHECK(found);
}

TEST_CASE("largest jordan block from the exact rank sequence") {
  YRSpec spec;
  spec.n = 5;
  spec.gamma = Rational(3, 2);
  ChainModel m = build_yr(spec);
  CHECK(jordan_order_exact(m, std::nullopt, GRat()) == 3);
}

TEST_CASE("robustness trials are reproducible and respect the bound") {
  RobustnessOptions opt;
  opt.n = 4;
  opt.trials = 5;
  opt.seed = 7;
  RobustnessSummary a = robustness_sweep(opt);
  RobustnessSummary b = robustness_sweep(opt);
  REQUIRE(a.trials.size() == 5);
  CHECK(a.violations == 0);
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    REQUIRE(a.trials[i].found);
    CHECK(a.trials[i].satisfies_bound);
    CHECK(a.trials[i].upper == b.trials[i].upper);
    CHECK(a.trials[i].lower == b.trials[i].lower);
    CHECK(a.trials[i].gamma_ep.approx == b.trials[i].gamma_ep.approx);
    // fixed hop 1 on the perturbed bond: collision never below 1
    RealRoot r = a.trials[i].gamma_ep;
    CHECK(compare_root(r, Rational(1)) >= 0);
  }
  RobustnessOptions other = opt;
  other.seed = 8;
  RobustnessSummary c = robustness_sweep(other);
  bool differs = false;
  for (std::size_t i = 0; i < c.trials.size(); ++i)
    if (c.trials[i].upper != a.trials[i].upper) differs = true;
  CHECK(differs);
}

TEST_CASE("series grid near the edge stays real and fits a square root") {
  RoccatiSpec spec;
  spec.n = 4;
  spec.variant = RoccatiSpec::Variant::PbcCorrected;
  ChainModel m = build_roccati(spec);
  SeriesOptions opt;
  opt.point = Rational(-1);
  opt.side = 1;  // approach from delta > -1
  opt.points = 8;
  opt.x0 = Rational(1, 100);
  SeriesCheck sc = series_check(m, opt);
  REQUIRE(sc.offsets.size() == 8);
  REQUIRE(sc.branch_values.size() == 4);
  for (double mi : sc.max_imag) CHECK(std::abs(mi) < 1e-9);
  // every eigenvalue collapses like sqrt(offset): exponent about 1/2
  for (const auto& fit : sc.fits) {
    CHECK(fit.reliable);
    CHECK(fit.exponent == doctest::Approx(0.5).epsilon(0.02));
  }
  // outermost branch coefficient: -(sqrt(10) + sqrt(2)) / 2
  double expect = -(std::sqrt(10.0) + std::sqrt(2.0)) / 2.0;
  CHECK(sc.fits[0].coefficient == doctest::Approx(expect).epsilon(0.05));
}
