#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace shufflesym {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Division-free determinant over a commutative ring (Bird's iteration).
///
/// X_1 = A, X_{k+1} = μ(X_k) A, det A = (-1)^{n-1} (X_n)_{11}, where μ(X)
/// keeps the strict upper triangle of X, zeroes the lower triangle and sets
/// μ(X)_{ii} = -Σ_{k>i} X_{kk}. O(n^4) ring operations, no inverses needed,
/// so it works over truncated power series whose pivots are not units.
/// T must be constructible from 0 and support +, -, *.
template <class T>
T determinant_division_free(const Matrix<T>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  Matrix<T> x = a;
  for (std::size_t step = 1; step < n; ++step) {
    Matrix<T> mu(n, std::vector<T>(n, T(0)));
    T tail(0);
    for (std::size_t i = n; i-- > 0;) {
      mu[i][i] = T(0) - tail;
      tail = tail + x[i][i];
      for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = x[i][j];
    }
    Matrix<T> next(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] + mu[i][k] * a[k][j];
      }
    }
    x = std::move(next);
  }
  return (n % 2 == 1) ? x[0][0] : T(0) - x[0][0];
}

/// Fraction-free (Bareiss) elimination with row pivoting. T must be an exact
/// field or an integral domain in which the Bareiss divisions are exact.
template <class T>
T determinant_bareiss(Matrix<T> a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return T(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace shufflesym
