#include "piezoscan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "piezoscan/errors.hpp"
#include "piezoscan/linalg.hpp"

namespace piezoscan::oracle {

void BeamProblem::validate() const {
  if (nodes < 11 || nodes % 2 == 0) throw ValidationError("oracle: node count must be odd and >= 11");
  if (!(junction > 0.0 && junction < span) || !std::isfinite(span)) {
    throw DegenerateGeometryError("oracle: junction must lie strictly inside the span");
  }
  if (!(rigidity > 0.0) || !std::isfinite(rigidity)) throw ValidationError("oracle: rigidity must be positive");
  if (!std::isfinite(force)) throw ValidationError("oracle: force must be finite");
  if (mirror_rigidity_ratio && !(*mirror_rigidity_ratio > 0.0)) {
    throw ValidationError("oracle: mirror rigidity ratio must be positive");
  }
}

double OracleSolution::tilt() const { return std::atan(deflection[junction_node] / junction); }

OracleSolution solve_fd(const BeamProblem& p) {
  p.validate();
  const std::size_t n = p.nodes;
  const double h = p.span / static_cast<double>(n - 1);
  const auto j = static_cast<std::size_t>(std::llround(p.junction / h));
  if (j < 1 || j > n - 3) throw DegenerateGeometryError("oracle: junction does not fall on an interior node");
  const double a = static_cast<double>(j) * h;

  OracleSolution sol;
  sol.junction_node = j;
  sol.junction = a;
  sol.grid.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.grid[i] = i + 1 == n ? p.span : static_cast<double>(i) * h;

  // Nodal system A y + r R_A = f, closed by the clamp-slope row c . y = 0.
  // A is tridiagonal: support and clamp rows are identities, the rest are
  // second differences equated to h^2 M(x) / EI.
  std::vector<double> lower(n, 1.0), diag(n, -2.0), upper(n, 1.0), f(n, 0.0), r(n, 0.0);
  lower[0] = upper[0] = 0.0;
  diag[0] = 1.0;
  lower[n - 1] = upper[n - 1] = 0.0;
  diag[n - 1] = 1.0;

  const double h2 = h * h;
  const double ei = p.rigidity;
  const double mirror_flex = p.mirror_rigidity_ratio ? 1.0 / (*p.mirror_rigidity_ratio * ei) : 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double x = sol.grid[i];
    if (i < j) {
      r[i] = -h2 * x * mirror_flex;
    } else if (i == j) {
      // The curvature jumps here; the stencil sees the mean of both sides.
      r[i] = -0.5 * h2 * a * (mirror_flex + 1.0 / ei);
    } else {
      r[i] = -h2 * x / ei;
      f[i] = h2 * p.force * (x - a) / ei;
    }
  }

  const std::vector<double> u = linalg::solve_tridiagonal(lower, diag, upper, f);
  const std::vector<double> w = linalg::solve_tridiagonal(lower, diag, upper, r);

  // y'(L) ~ (3 y_{n-1} - 4 y_{n-2} + y_{n-3}) / (2h) = 0
  auto clamp_slope = [&](const std::vector<double>& v) { return 3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]; };
  const double cw = clamp_slope(w);
  if (cw == 0.0 || !std::isfinite(cw)) throw SingularSystemError("oracle: bordered system is singular");
  sol.reaction = clamp_slope(u) / cw;

  sol.deflection.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.deflection[i] = u[i] - sol.reaction * w[i];
  return sol;
}

HalfSpanBeam closed_form_beam(const BeamProblem& problem, const OracleSolution& solution) {
  return {solution.junction, problem.span, problem.force, problem.rigidity};
}

double max_norm_error(const BeamProblem& problem, const OracleSolution& solution) {
  const HalfSpanBeam beam = closed_form_beam(problem, solution);
  double err = 0.0;
  for (std::size_t i = 0; i < solution.grid.size(); ++i) {
    err = std::max(err, std::abs(solution.deflection[i] - deflection(beam, solution.grid[i])));
  }
  return err;
}

double ConvergenceStudy::min_order() const {
  if (orders.empty()) return std::numeric_limits<double>::quiet_NaN();
  return *std::min_element(orders.begin(), orders.end());
}

ConvergenceStudy convergence_study(const BeamProblem& problem, std::span<const std::size_t> node_counts) {
  ConvergenceStudy study;
  if (node_counts.empty()) return study;

  BeamProblem p = problem;
  p.nodes = *std::min_element(node_counts.begin(), node_counts.end());
  p.junction = solve_fd(p).junction;

  std::vector<double> spacing;
  for (std::size_t nodes : node_counts) {
    p.nodes = nodes;
    const OracleSolution sol = solve_fd(p);
    study.nodes.push_back(nodes);
    study.errors.push_back(max_norm_error(p, sol));
    spacing.push_back(p.span / static_cast<double>(nodes - 1));
  }
  for (std::size_t i = 0; i + 1 < study.errors.size(); ++i) {
    study.orders.push_back(std::log(study.errors[i] / study.errors[i + 1]) / std::log(spacing[i] / spacing[i + 1]));
  }
  return study;
}

}  // namespace piezoscan::oracle
