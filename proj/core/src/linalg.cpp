#include "piezoscan/linalg.hpp"

#include <string>

namespace piezoscan::linalg {

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw SingularSystemError("tridiagonal system: inconsistent band sizes");
  }

  std::vector<double> c(n), d(n);
  double denom = diag[0];
  if (denom == 0.0 || !std::isfinite(denom)) throw SingularSystemError("tridiagonal system: zero pivot at row 0");
  c[0] = upper[0] / denom;
  d[0] = rhs[0] / denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = diag[i] - lower[i] * c[i - 1];
    if (denom == 0.0 || !std::isfinite(denom)) {
      throw SingularSystemError("tridiagonal system: zero pivot at row " + std::to_string(i));
    }
    c[i] = i + 1 < n ? upper[i] / denom : 0.0;
    d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
  }

  std::vector<double> x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

}  // namespace piezoscan::linalg
