#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qhchain/isolate.hpp"
#include "qhchain/model.hpp"
#include "qhchain/poly.hpp"

namespace qhchain {

// Discriminant (in E) of the characteristic polynomial, as an exact
// polynomial in the model parameter. Vanishes exactly where eigenvalues
// collide. For ring models with rational corner entries the common
// denominator is cleared first; the zeros of that denominator are parameter
// values where the model itself is undefined.
Poly discriminant_of_model(const ChainModel& model);

struct EPCandidate {
  RealRoot location;               // parameter value (exact or interval)
  int root_multiplicity = 1;       // multiplicity in the discriminant
  std::complex<double> eigenvalue{};  // the colliding eigenvalue
  bool eigen_exact = false;
  Rational eigen_rational{};
  int algebraic_multiplicity = 1;
  int geometric_multiplicity = 1;
  int ep_order = 1;                // largest Jordan block at the eigenvalue
  bool is_ep = false;              // geometric < algebraic
  bool certified = false;          // multiplicities exact, not tolerance-based
};

struct EPReport {
  Poly discriminant;               // in the parameter
  Poly excluded;                   // denominator locus (1 when empty)
  std::vector<EPCandidate> candidates;  // sorted by parameter location
};

// Isolate the real roots of the discriminant and classify each collision:
// algebraic vs geometric multiplicity, EP order, diabolic crossings flagged
// non-EP. Roots on the excluded locus are dropped.
EPReport find_eps(const ChainModel& model);

// Smallest strictly positive candidate location, if any.
std::optional<RealRoot> first_positive_candidate(const EPReport& report);

// Largest Jordan block of H(param) at exact eigenvalue E, via the rank
// sequence of powers of H - E*I.
int jordan_order_exact(const ChainModel& model, std::optional<Rational> param,
                       const GRat& e);

struct RobustnessOptions {
  int n = 4;
  int bond = -1;        // 1-based perturbed bond; -1 means N-1
  int trials = 50;
  std::uint64_t seed = 1;
  Rational t_fixed = 1; // forward hop on the perturbed bond
  bool random_lower = false;  // draw reverse hops independently as well
};

struct RobustnessTrial {
  std::vector<Rational> upper, lower;  // drawn couplings (perturbed bond at t_fixed)
  bool found = false;
  RealRoot gamma_ep;    // smallest positive collision parameter
  bool satisfies_bound = false;  // gamma_ep >= t_fixed
};

struct RobustnessSummary {
  RobustnessOptions options;
  std::vector<RobustnessTrial> trials;
  int violations = 0;  // trials where the bound fails
};

// Disordered chains with one bond carrying hops (t_k, t_k - gamma): draw the
// other couplings at random, locate the first collision parameter per trial,
// and check it never falls below t_k. Trials are keyed by (seed, index) so
// any execution order reproduces the same summary.
RobustnessSummary robustness_sweep(const RobustnessOptions& opt);

// Model for a single robustness trial (parameter "gamma").
ChainModel robustness_trial_model(const RobustnessOptions& opt,
                                  std::uint64_t trial,
                                  std::vector<Rational>* upper_out = nullptr,
                                  std::vector<Rational>* lower_out = nullptr);

struct SeriesOptions {
  Rational point = 0;     // expansion point of the parameter
  int side = 1;           // approach along point + side*x, x -> 0+
  int points = 12;
  Rational x0 = Rational(1, 100);   // largest offset
  Rational ratio = Rational(1, 2);  // geometric grid factor
};

struct BranchFit {
  int branch = 0;          // index in the ascending real-sorted spectrum
  double exponent = 0.0;   // fitted p in E ~ c x^p
  double coefficient = 0.0;
  double residual = 0.0;   // rms deviation of the log-log fit
  bool reliable = false;
};

struct SeriesCheck {
  Rational point;
  int side = 1;
  std::vector<double> offsets;                    // x grid, descending
  std::vector<std::vector<double>> branch_values; // [branch][grid] Re E
  std::vector<double> max_imag;                   // per grid point
  std::vector<BranchFit> fits;
};

// Eigenvalue branches on a geometric grid approaching an expansion point,
// with a power-law fit per branch. Branches are matched by sort order, which
// is stable while the spectrum stays real.
SeriesCheck series_check(const ChainModel& model, const SeriesOptions& opt);

}  // namespace qhchain
