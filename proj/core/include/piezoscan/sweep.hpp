#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "piezoscan/design.hpp"

namespace piezoscan {

enum class SweepAxis { beam_length, beam_width, substrate_thickness, piezo_thickness, mirror_side, voltage };

/// Accepts the axis names used on the command line ("beam_length", ...).
SweepAxis parse_axis(std::string_view name);
std::string_view axis_name(SweepAxis axis);

/// Copy of `base` with one parameter replaced (SI value).
ScannerDesign with_parameter(ScannerDesign base, SweepAxis axis, double value);

struct SweepSpec {
  ScannerDesign base;
  SweepAxis axis = SweepAxis::beam_length;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 2;

  /// Throws ValidationError unless from < to (both finite) and steps >= 2.
  void validate() const;

  /// Uniform points from `from` to `to` inclusive; the last point is `to` exactly.
  std::vector<double> points() const;
};

struct SweepRecord {
  double value = 0.0;      ///< swept parameter, SI
  double tilt_deg = 0.0;   ///< |tilt|, degrees
  double y_max = 0.0;      ///< m
  double force = 0.0;      ///< N, signed
  double reaction = 0.0;   ///< N, signed
  std::string status = "ok";  ///< "ok" or the error of a failed point

  bool ok() const { return status == "ok"; }
};

/// Evaluates one design. Errors are caught and recorded in `status` with NaN
/// numeric fields.
SweepRecord evaluate(const ScannerDesign& design, double value);

/// Records in ascending parameter order. Points may be evaluated on up to
/// `threads` workers; the records do not depend on the thread count.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads = 1);

enum class Objective { tilt, y_max };

struct Optimum {
  double value = 0.0;      ///< parameter, SI
  double objective = 0.0;  ///< |tilt| in degrees, or y_max in m
};

/// Grid scan over spec.points() followed by golden-section refinement in the
/// bracket around the best grid point (relative interval tolerance 1e-4).
/// Ties go to the smallest parameter value. Geometry errors propagate.
Optimum optimize_1d(const SweepSpec& spec, Objective objective);

/// Beam lengths of the three tabulated devices, in order A, B, C.
inline constexpr double table1_beam_lengths[3] = {850e-6, 600e-6, 500e-6};

/// One record per tabulated device (A, B, C) on `base` with the beam length replaced.
std::vector<SweepRecord> table1(const ScannerDesign& base = reference_design());

}  // namespace piezoscan
