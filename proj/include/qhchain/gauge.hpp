#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qhchain/model.hpp"

namespace qhchain {

// Classification of a single bond ratio R_j = conj(H_{j+1,j}) / H_{j,j+1}.
// A diagonal gauge exists only when every ratio is real and positive.
enum class RatioFlag {
  RealPositive,
  RealNonPositive,
  Complex,
  Undefined,  // H_{j,j+1} = 0 while H_{j+1,j} != 0
  Decoupled,  // both hops vanish; the chain splits here
};

struct RatioInfo {
  RatioFlag flag = RatioFlag::Undefined;
  std::complex<double> approx{};  // ratio as a double, when defined
  bool has_exact = false;
  GRat exact{};                   // exact value on the rational path
};

enum class GaugeVerdict { Hermitian, QuasiHermitian, NotQuasiHermitian };

struct GaugeReport {
  GaugeVerdict verdict = GaugeVerdict::NotQuasiHermitian;
  // Bonds 1..N-1; under periodic boundary a final cyclic bond N (through the
  // corner) is appended.
  std::vector<RatioInfo> ratios;
  // Site weights, Q_1 = 1. q_squared holds the exact squares on the rational
  // path (Q_j itself is a square root and generally irrational). Empty when
  // the verdict is NotQuasiHermitian.
  std::vector<double> q;
  std::vector<Rational> q_squared;
  // Transformed bond entries of Q^{-1} H Q.
  std::vector<std::complex<double>> upper_t, lower_t;
  std::complex<double> corner_upper_t{}, corner_lower_t{};
  int witness = 0;      // 1-based offending bond, 0 when none
  std::string reason;   // empty unless the verdict is NotQuasiHermitian
  bool holonomy_checked = false;  // single-loop ring product test ran
  bool holonomy_ok = false;
};

std::vector<RatioInfo> compute_ratios(const ChainModel& model,
                                      std::optional<Rational> param,
                                      double tol = 1e-10);

GaugeReport build_gauge(const ChainModel& model, std::optional<Rational> param,
                        double tol = 1e-10);

// Entrywise certificate Q^2 H^dagger = H Q^2 with the metric read off the
// gauge. Exact equality on the rational path, residual test otherwise.
struct Certificate {
  bool holds = false;
  double residual = 0.0;  // max-norm, scaled; 0 on the exact path
  int row = -1, col = -1;  // first failing entry, if any
  std::string note;
};

Certificate check_quasi_hermitian(const ChainModel& model,
                                  std::optional<Rational> param,
                                  double tol = 1e-10);

// The unique ring-closure entry H_{N,1} = R_{N-1}...R_1 conj(H_{1,N}) that
// makes the gauged operator Hermitian, kept symbolic in the parameter.
RatFunc pbc_reality_corner(const ChainModel& model);

std::string verdict_name(GaugeVerdict v);
std::string ratio_flag_name(RatioFlag f);

}  // namespace qhchain
