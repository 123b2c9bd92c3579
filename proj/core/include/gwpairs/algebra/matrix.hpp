#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace gwpairs {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_zero_element(const mpq_class& x) { return sgn(x) == 0; }
template <class T>
bool is_zero_element(const T& x) {
  return x.is_zero();
}

/// Determinant by Gaussian elimination over a field.
template <class T>
T determinant(Matrix<T> m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  T det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && is_zero_element(m[pivot][col])) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const T inv = T(1) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (is_zero_element(m[r][col])) continue;
      const T factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Rank by row reduction over a field.
template <class T>
int matrix_rank(Matrix<T> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m.front().size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && is_zero_element(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const T inv = T(1) / m[rank][col];
    for (size_t r = rank + 1; r < rows; ++r) {
      if (is_zero_element(m[r][col])) continue;
      const T factor = m[r][col] * inv;
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace gwpairs
