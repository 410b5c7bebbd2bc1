#pragma once

// Dense exact linear algebra over the rationals. The systems here are small
// Gram matrices, mostly tridiagonal chains, so elimination skips zero entries.

#include "sasaki/arith.hpp"

#include <stdexcept>
#include <vector>

namespace sasaki {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

inline Rational dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

/// Solves A x = b for square non-singular A; throws std::domain_error otherwise.
inline RVector solve_linear(RMatrix a, RVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_linear: matrix is not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("solve_linear: singular matrix");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) {
        if (!a[col][k].is_zero()) a[row][k] -= f * a[col][k];
      }
      b[row] -= f * b[col];
    }
  }
  RVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t k = i + 1; k < n; ++k)
      if (!a[i][k].is_zero()) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Symmetric negative definiteness via the pivots of -A (all must be positive).
inline bool negative_definite(const RMatrix& a) {
  const std::size_t n = a.size();
  RMatrix m(n, RVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -a[i][j];
  for (std::size_t col = 0; col < n; ++col) {
    if (m[col][col].sign() <= 0) return false;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k)
        if (!m[col][k].is_zero()) m[row][k] -= f * m[col][k];
    }
  }
  return true;
}

}  // namespace sasaki
