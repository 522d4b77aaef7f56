#pragma once

#include <optional>
#include <vector>

#include "qhchain/exceptional.hpp"
#include "qhchain/model.hpp"

namespace qhchain {

// Uniform chain with asymmetric hops J(1-d) forward and J(1+d) backward.
// The ring variants differ in the closing entry H_{N,1}: `PbcNaive` repeats
// the bulk pattern, `PbcCorrected` uses the unique value that restores a
// positive diagonal gauge (rational in d, pole at d = 1).
struct RoccatiSpec {
  int n = 4;
  Rational j = 1;
  std::optional<Rational> delta;  // nullopt: keep "delta" symbolic
  enum class Variant { Obc, PbcNaive, PbcCorrected };
  Variant variant = Variant::Obc;
};

ChainModel build_roccati(const RoccatiSpec& spec);

// Uniform-diagonal chain with forward hops t_n and backward hops
// J_n = t_n - gamma on one perturbed bond (J_n = t_n elsewhere, or an
// explicit override list).
struct YRSpec {
  int n = 4;
  Rational beta = 0;
  std::vector<Rational> t;  // size n-1; empty means all ones
  std::optional<std::vector<Rational>> j_override;  // reverse hops off the perturbed bond
  int bond = -1;            // 1-based perturbed bond; -1 means n-1
  std::optional<Rational> gamma;  // nullopt: keep "gamma" symbolic
};

ChainModel build_yr(const YRSpec& spec);

// Uniform diagonal shifts translate the spectrum but leave collision
// parameters alone: compares the collision locations at two diagonal values.
bool beta_shift_check(const YRSpec& spec, const Rational& beta1,
                      const Rational& beta2);

struct InvertibilityReport {
  Poly det;               // det H as an exact polynomial in the parameter
  bool identically_zero = false;
  std::vector<RealRoot> singular_params;  // real roots of det (empty if det == 0)
};

// det H(gamma) for the zero-diagonal chain: identically zero for odd N,
// otherwise a nonzero polynomial whose roots are the only non-invertible
// parameter values.
InvertibilityReport invertibility_check(const YRSpec& spec);

// True when two isolated real roots describe the same real number.
bool same_real_root(const RealRoot& a, const RealRoot& b);

}  // namespace qhchain
