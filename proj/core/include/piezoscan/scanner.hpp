#pragma once

#include <cstddef>
#include <vector>

#include "piezoscan/multimorph.hpp"

namespace piezoscan {

/// Mirror plate held between two identical multimorph beams.
///
/// By antisymmetry the mirror center does not move, so half of the device is
/// a beam simply supported at the mirror center (x = 0), carrying the rigid
/// half-mirror on [0, a], and clamped at the anchor (x = half_span). The
/// actuator force acts at the mirror edge x = a.
struct ScannerGeometry {
  MultimorphStack stack;
  double mirror_side = 0.0;  ///< m, edge of the square mirror

  /// a: distance from the mirror center to the beam junction.
  double junction() const { return 0.5 * mirror_side; }
  /// a + beam length. Not the same length as stack.length.
  double half_span() const { return junction() + stack.length; }

  void validate() const;
};

/// Symmetry-reduced half of the device with its load.
struct HalfSpanBeam {
  double junction = 0.0;  ///< a, m
  double span = 0.0;      ///< half span, m
  double force = 0.0;     ///< N, actuator force at x = a
  double rigidity = 0.0;  ///< N m^2 of the flexible segment [a, span]

  /// Throws DegenerateGeometryError unless 0 < junction < span, and
  /// ValidationError unless rigidity > 0 and force is finite.
  void validate() const;
};

enum class Segment { mirror, beam };

struct InternalLoads {
  double shear = 0.0;   ///< N, T = -dM/dx
  double moment = 0.0;  ///< N m
};

/// Reaction at the mirror-center support,
///   R_A = -F (a^3 - 3 a L^2 + 2 L^3) / (2 L^3 - 2 a^3).
double reaction(const HalfSpanBeam& beam);

/// Shear and bending moment at x. M = R_A x on the mirror and
/// M = R_A x + F (x - a) on the beam; the shear on [0, a] is the left limit.
InternalLoads internal_loads(const HalfSpanBeam& beam, double x);

/// Deflection of the half span, 0 <= x <= span.
double deflection(const HalfSpanBeam& beam, double x);
double slope(const HalfSpanBeam& beam, double x);

/// The two branches evaluated anywhere (no range dispatch). Used to check
/// continuity across the junction.
double segment_deflection(const HalfSpanBeam& beam, Segment segment, double x);
double segment_slope(const HalfSpanBeam& beam, Segment segment, double x);
double segment_curvature(const HalfSpanBeam& beam, Segment segment, double x);

/// Signed mirror rotation, atan(F a (L - a)^3 / (4 EI (a^2 + L a + L^2))).
double tilt(const HalfSpanBeam& beam);

struct Extremum {
  double magnitude = 0.0;  ///< |y| at the extremum, m
  double deflection = 0.0;  ///< signed y at the extremum, m
  double position = 0.0;   ///< x from the mirror center, m
};

/// Largest |y| of the half span. The interior stationary point of the beam
/// segment is compared against the mirror edge; with zero force the result
/// is (0, a).
Extremum max_deflection(const HalfSpanBeam& beam);

struct ProfilePoint {
  double position = 0.0;    ///< m
  double deflection = 0.0;  ///< m
};

/// Full-device profile on u in [0, 2 L]: left anchor at u = 0, mirror center
/// at u = L, right anchor at u = 2 L; y(u) = y(L - u) on the left half and
/// -y(u - L) on the right half. Samples are uniform in u. When the sample
/// count is even the mirror center is inserted as an extra point.
std::vector<ProfilePoint> device_profile(const HalfSpanBeam& beam, std::size_t samples);

struct ScannerSolution {
  double force = 0.0;      ///< N, signed
  double reaction = 0.0;   ///< N, signed
  double rigidity = 0.0;   ///< N m^2
  double tilt = 0.0;       ///< rad, signed
  double y_max = 0.0;      ///< m, magnitude
  double y_at_max = 0.0;   ///< m, signed
  double x_at_ymax = 0.0;  ///< m, from the mirror center
  std::vector<ProfilePoint> profile;

  double tilt_magnitude() const;
};

HalfSpanBeam half_span_beam(const ScannerGeometry& geometry, double voltage);

ScannerSolution solve_scanner(const ScannerGeometry& geometry, double voltage, std::size_t samples = 401);

}  // namespace piezoscan
