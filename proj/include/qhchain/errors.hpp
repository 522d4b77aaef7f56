#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qhchain {

// Error taxonomy mirrors the CLI exit codes: UsageError -> 2,
// ComputeError -> 1, NonConvergence -> 3.

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
  std::vector<double> residuals;
  NonConvergence(const std::string& what, std::vector<double> res)
      : std::runtime_error(what), residuals(std::move(res)) {}
};

}  // namespace qhchain
