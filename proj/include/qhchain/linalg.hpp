#pragma once

#include <cstddef>
#include <vector>

#include "qhchain/rational.hpp"

namespace qhchain {

// Small dense matrices over the Gaussian rationals. Everything here is
// exact; no pivoting thresholds, no tolerances.
using GMat = std::vector<std::vector<GRat>>;

inline GMat gmat_identity(std::size_t n) {
  GMat m(n, std::vector<GRat>(n, GRat()));
  for (std::size_t j = 0; j < n; ++j) m[j][j] = GRat(1);
  return m;
}

inline GMat gmat_mul(const GMat& a, const GMat& b) {
  std::size_t rows = a.size();
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  GMat out(rows, std::vector<GRat>(cols, GRat()));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline GMat gmat_sub(const GMat& a, const GMat& b) {
  GMat out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

inline GMat gmat_conj_transpose(const GMat& a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  GMat out(cols, std::vector<GRat>(rows, GRat()));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j].conj();
  return out;
}

inline bool gmat_is_zero(const GMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

// Row-echelon rank by fraction-full Gaussian elimination.
inline std::size_t gmat_rank(GMat m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    GRat inv = GRat(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      GRat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace qhchain
