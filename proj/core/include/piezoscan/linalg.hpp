#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <algorithm>
#include <utility>
#include <vector>

#include "piezoscan/errors.hpp"

namespace piezoscan::linalg {

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
using Vector = std::array<double, N>;

/// Solves A x = b by Gaussian elimination with scaled partial pivoting.
///
/// Rows are compared by |a_ik| / max_j |a_ij| when choosing the pivot, which
/// keeps the choice sensible when rows carry different physical units.
/// Throws SingularSystemError on a zero or non-finite pivot.
template <std::size_t N>
Vector<N> solve(Matrix<N> a, Vector<N> b) {
  Vector<N> scale{};
  for (std::size_t i = 0; i < N; ++i) {
    double m = 0.0;
    for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a[i][j]));
    if (m == 0.0 || !std::isfinite(m)) throw SingularSystemError("linear system has a zero or non-finite row");
    scale[i] = m;
  }

  for (std::size_t k = 0; k < N; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a[k][k]) / scale[k];
    for (std::size_t i = k + 1; i < N; ++i) {
      const double r = std::abs(a[i][k]) / scale[i];
      if (r > best) {
        best = r;
        pivot = i;
      }
    }
    if (best == 0.0 || !std::isfinite(best)) throw SingularSystemError("linear system is singular");
    if (pivot != k) {
      std::swap(a[k], a[pivot]);
      std::swap(b[k], b[pivot]);
      std::swap(scale[k], scale[pivot]);
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      const double f = a[i][k] / a[k][k];
      if (f == 0.0) continue;
      a[i][k] = 0.0;
      for (std::size_t j = k + 1; j < N; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }

  Vector<N> x{};
  for (std::size_t k = N; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < N; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

/// Solves a tridiagonal system (Thomas algorithm).
/// lower[i] multiplies x[i-1] in row i (lower[0] unused), upper[i] multiplies
/// x[i+1] (upper[n-1] unused).
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

}  // namespace piezoscan::linalg
