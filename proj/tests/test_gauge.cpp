#include <cmath>

#include "doctest.h"
#include "qhchain/gauge.hpp"
#include "qhchain/models.hpp"
#include "qhchain/rng.hpp"

using namespace qhchain;
using nlohmann::json;

TEST_CASE("asymmetric open chain admits a diagonal gauge") {
  RoccatiSpec spec;
  spec.n = 5;
  spec.delta = Rational(1, 2);
  ChainModel m = build_roccati(spec);
  GaugeReport rep = build_gauge(m, std::nullopt);
  CHECK(rep.verdict == GaugeVerdict::QuasiHermitian);
  REQUIRE(rep.q.size() == 5);
  CHECK(rep.q[0] == 1.0);
  // ratio (1+d)/(1-d) = 3, so Q_j^2 = 3^(j-1)
  REQUIRE(rep.q_squared.size() == 5);
  for (int j = 0; j < 5; ++j)
    CHECK(rep.q_squared[static_cast<std::size_t>(j)] == rat_pow(Rational(3), j));
  // transformed hops are symmetric: sqrt((1-d)(1+d))
  double t = std::sqrt(3.0) / 2.0;
  for (int j = 0; j < 4; ++j) {
    CHECK(rep.upper_t[static_cast<std::size_t>(j)].real() ==
          doctest::Approx(t).epsilon(1e-12));
    CHECK(rep.lower_t[static_cast<std::size_t>(j)].real() ==
          doctest::Approx(t).epsilon(1e-12));
  }
  Certificate cert = check_quasi_hermitian(m, std::nullopt);
  CHECK(cert.holds);
  CHECK(cert.residual == 0.0);
}

TEST_CASE("hermitian chain is recognized as such") {
  json d{{"n", 3},
         {"boundary", "obc"},
         {"diag", {1, 2, 3}},
         {"upper", {json::array({1, 1}), "1/2"}},
         {"lower", {json::array({1, -1}), "1/2"}}};
  ChainModel m = load_model(d);
  GaugeReport rep = build_gauge(m, std::nullopt);
  CHECK(rep.verdict == GaugeVerdict::Hermitian);
  CHECK(rep.q_squared[1] == Rational(1));
  CHECK(check_quasi_hermitian(m, std::nullopt).holds);
}

TEST_CASE("negative ratio defeats the gauge with a witness") {
  json d{{"n", 3},
         {"boundary", "obc"},
         {"diag", {0, 0, 0}},
         {"upper", {1, -1}},
         {"lower", {1, 1}}};
  ChainModel m = load_model(d);
  GaugeReport rep = build_gauge(m, std::nullopt);
  CHECK(rep.verdict == GaugeVerdict::NotQuasiHermitian);
  CHECK(rep.witness == 2);
  CHECK(rep.ratios[1].flag == RatioFlag::RealNonPositive);
  CHECK(rep.q.empty());
  Certificate cert = check_quasi_hermitian(m, std::nullopt);
  CHECK_FALSE(cert.holds);
}

TEST_CASE("complex ratio defeats the gauge") {
  json d{{"n", 2},
         {"boundary", "obc"},
         {"diag", {0, 0}},
         {"upper", {1}},
         {"lower", {json::array({0, 1})}}};
  ChainModel m = load_model(d);
  GaugeReport rep = build_gauge(m, std::nullopt);
  CHECK(rep.verdict == GaugeVerdict::NotQuasiHermitian);
  CHECK(rep.ratios[0].flag == RatioFlag::Complex);
}

TEST_CASE("one-sided zero hop is undefined, two-sided splits the chain") {
  json onesided{{"n", 2},
                {"boundary", "obc"},
                {"diag", {0, 0}},
                {"upper", {0}},
                {"lower", {1}}};
  GaugeReport rep = build_gauge(load_model(onesided), std::nullopt);
  CHECK(rep.verdict == GaugeVerdict::NotQuasiHermitian);
  CHECK(rep.ratios[0].flag == RatioFlag::Undefined);

  json split{{"n", 4},
             {"boundary", "obc"},
             {"diag", {0, 0, 0, 0}},
             {"upper", {2, 0, "1/2"}},
             {"lower", {"1/2", 0, 2}}};
  GaugeReport rs = build_gauge(load_model(split), std::nullopt);
  CHECK(rs.verdict == GaugeVerdict::QuasiHermitian);
  CHECK(rs.ratios[1].flag == RatioFlag::Decoupled);
  // each block restarts; site 3 carries weight 1 again
  CHECK(rs.q_squared[0] == Rational(1));
  CHECK(rs.q_squared[1] == Rational(1, 4));
  CHECK(rs.q_squared[2] == Rational(1));
  CHECK(rs.q_squared[3] == Rational(4));
  CHECK(check_quasi_hermitian(load_model(split), std::nullopt).holds);
}

TEST_CASE("naive ring closure fails the loop product") {
  RoccatiSpec spec;
  spec.n = 4;
  spec.delta = Rational(1, 2);
  spec.variant = RoccatiSpec::Variant::PbcNaive;
  ChainModel m = build_roccati(spec);
  GaugeReport rep = build_gauge(m, std::nullopt);
  CHECK(rep.verdict == GaugeVerdict::NotQuasiHermitian);
  CHECK(rep.holonomy_checked);
  CHECK_FALSE(rep.holonomy_ok);
}

TEST_CASE("corrected ring closure passes the loop product exactly") {
  for (int n : {3, 4, 5, 6}) {
    RoccatiSpec spec;
    spec.n = n;
    spec.delta = Rational(1, 3);
    spec.variant = RoccatiSpec::Variant::PbcCorrected;
    ChainModel m = build_roccati(spec);
    GaugeReport rep = build_gauge(m, std::nullopt);
    CHECK(rep.verdict == GaugeVerdict::QuasiHermitian);
    CHECK(rep.holonomy_checked);
    CHECK(rep.holonomy_ok);
    Certificate cert = check_quasi_hermitian(m, std::nullopt);
    CHECK(cert.holds);
    CHECK(cert.residual == 0.0);
  }
}

TEST_CASE("ring reality corner reproduces the corrected closure") {
  RoccatiSpec naive;
  naive.n = 4;
  naive.variant = RoccatiSpec::Variant::PbcNaive;
  ChainModel m = build_roccati(naive);
  RatFunc fixed = pbc_reality_corner(m);

  RoccatiSpec corr = naive;
  corr.variant = RoccatiSpec::Variant::PbcCorrected;
  ChainModel mc = build_roccati(corr);
  CHECK(fixed == mc.corner_lower);
  // and it differs from the naive corner away from delta = 0
  CHECK(fixed != m.corner_lower);
  CHECK(fixed.eval(GRat(Rational(0))) == m.corner_lower.eval(GRat(Rational(0))));
}

TEST_CASE("random exact gauges satisfy the certificate identically") {
  SplitMix64 rng = stream_rng(20240801, 0);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 6);
    json d{{"n", n}, {"boundary", "obc"}};
    json diag = json::array(), upper = json::array(), lower = json::array();
    for (int i = 0; i < n; ++i)
      diag.push_back(rat_str(draw_coupling(rng) - Rational(1, 2)));
    for (int i = 0; i + 1 < n; ++i) {
      Rational u = draw_coupling(rng);
      Rational ratio = draw_coupling(rng);  // positive, so gauge must exist
      upper.push_back(rat_str(u));
      lower.push_back(rat_str(u * ratio));
    }
    d["diag"] = diag;
    d["upper"] = upper;
    d["lower"] = lower;
    ChainModel m = load_model(d);
    Certificate cert = check_quasi_hermitian(m, std::nullopt);
    CHECK(cert.holds);
    CHECK(cert.residual == 0.0);
  }
}

TEST_CASE("numeric entries take the tolerance-based path") {
  json d{{"n", 3},
         {"boundary", "obc"},
         {"diag", {0.0, 0.5, -0.5}},
         {"upper", {0.5, 2.0}},
         {"lower", {2.0, 0.125}}};
  ChainModel m = load_model(d);
  GaugeReport rep = build_gauge(m, std::nullopt);
  CHECK(rep.verdict == GaugeVerdict::QuasiHermitian);
  CHECK(rep.q_squared.empty());  // no exact weights on the numeric path
  REQUIRE(rep.q.size() == 3);
  CHECK(rep.q[1] == doctest::Approx(2.0));
  Certificate cert = check_quasi_hermitian(m, std::nullopt);
  CHECK(cert.holds);
  CHECK(cert.residual < 1e-12);
}
