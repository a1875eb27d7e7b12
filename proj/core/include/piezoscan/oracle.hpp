#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "piezoscan/scanner.hpp"

namespace piezoscan::oracle {

/// Half-span beam for the finite-difference solver: simple support at x = 0,
/// mirror on [0, junction], point force at the junction, clamp at x = span.
struct BeamProblem {
  double span = 0.0;
  double junction = 0.0;
  double force = 0.0;
  double rigidity = 0.0;
  std::size_t nodes = 2001;
  /// nullopt: the mirror is exactly rigid (y'' = 0 rows). Otherwise the
  /// mirror rigidity is this multiple of `rigidity`.
  std::optional<double> mirror_rigidity_ratio;

  /// Throws ValidationError unless nodes >= 11 and odd, 0 < junction < span,
  /// rigidity > 0 and any mirror ratio > 0.
  void validate() const;
};

struct OracleSolution {
  double reaction = 0.0;
  std::vector<double> grid;
  std::vector<double> deflection;
  std::size_t junction_node = 0;
  double junction = 0.0;  ///< junction snapped to the grid

  /// Mirror rotation from the nodal deflection at the junction.
  double tilt() const;
};

/// Solves E I y'' = M(x; R_A) with R_A as an extra unknown:
/// y'' = 0 on the rigid mirror, second-order central differences on the
/// beam, y(0) = 0, y(L) = 0 and a one-sided second-order y'(L) = 0.
/// The junction is snapped to the nearest node.
OracleSolution solve_fd(const BeamProblem& problem);

/// Closed-form beam matching the oracle's snapped junction.
HalfSpanBeam closed_form_beam(const BeamProblem& problem, const OracleSolution& solution);

/// max_i |y_fd(x_i) - y_closed(x_i)|.
double max_norm_error(const BeamProblem& problem, const OracleSolution& solution);

struct ConvergenceStudy {
  std::vector<std::size_t> nodes;
  std::vector<double> errors;  ///< absolute max-norm deflection error per resolution
  std::vector<double> orders;  ///< log(e_i / e_{i+1}) / log(h_i / h_{i+1})

  double min_order() const;
};

/// Max-norm errors against the closed form for each node count. The junction
/// is snapped on the coarsest grid and held fixed, so node counts should
/// refine that grid (e.g. 101, 201, 401).
ConvergenceStudy convergence_study(const BeamProblem& problem, std::span<const std::size_t> node_counts);

}  // namespace piezoscan::oracle
