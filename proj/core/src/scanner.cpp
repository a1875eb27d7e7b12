#include "piezoscan/scanner.hpp"

#include <cmath>
#include <string>

#include "piezoscan/errors.hpp"

namespace piezoscan {

namespace {

// 4 EI (a^2 + L a + L^2)
double denominator(const HalfSpanBeam& b) {
  const double a = b.junction, l = b.span;
  return 4.0 * b.rigidity * (a * a + l * a + l * l);
}

void check_range(const HalfSpanBeam& b, double x) {
  if (!(x >= 0.0 && x <= b.span)) {
    throw ValidationError("scanner: position " + std::to_string(x) + " outside [0, " + std::to_string(b.span) + "]");
  }
}

}  // namespace

void ScannerGeometry::validate() const {
  stack.validate();
  if (!(mirror_side > 0.0) || !std::isfinite(mirror_side)) throw ValidationError("scanner: mirror side must be positive");
}

void HalfSpanBeam::validate() const {
  if (!(junction > 0.0 && junction < span) || !std::isfinite(span)) {
    throw DegenerateGeometryError("scanner: junction must lie strictly inside the half span (0 < a < L)");
  }
  if (!(rigidity > 0.0) || !std::isfinite(rigidity)) throw ValidationError("scanner: rigidity must be positive");
  if (!std::isfinite(force)) throw ValidationError("scanner: force must be finite");
}

double reaction(const HalfSpanBeam& beam) {
  beam.validate();
  const double a = beam.junction, l = beam.span;
  return -beam.force * (a * a * a - 3.0 * a * l * l + 2.0 * l * l * l) / (2.0 * l * l * l - 2.0 * a * a * a);
}

InternalLoads internal_loads(const HalfSpanBeam& beam, double x) {
  const double r = reaction(beam);
  check_range(beam, x);
  if (x <= beam.junction) return {-r, r * x};
  return {-(r + beam.force), r * x + beam.force * (x - beam.junction)};
}

// Mirror: y = -F a (a - L)^3 x / den, a straight line through the support.
// Beam:   y = F a [(a + L) x^3 - 2 (L^2 + a^2 + a L) x^2 + (L^3 + 4 a^2 L + a L^2) x - 2 a^2 L^2] / den,
// evaluated in the factored form F a (x - L)^2 ((a + L) x - 2 a^2) / den,
// which vanishes exactly at the clamp.
double segment_deflection(const HalfSpanBeam& beam, Segment segment, double x) {
  const double a = beam.junction, l = beam.span, f = beam.force;
  if (segment == Segment::mirror) {
    const double c = a - l;
    return -f * a * (c * c * c) * x / denominator(beam);
  }
  const double d = x - l;
  return f * a * d * d * ((a + l) * x - 2.0 * a * a) / denominator(beam);
}

double segment_slope(const HalfSpanBeam& beam, Segment segment, double x) {
  const double a = beam.junction, l = beam.span, f = beam.force;
  if (segment == Segment::mirror) {
    const double c = a - l;
    return -f * a * (c * c * c) / denominator(beam);
  }
  const double d = x - l;
  return f * a * d * (3.0 * (a + l) * x - 4.0 * a * a - l * (a + l)) / denominator(beam);
}

double segment_curvature(const HalfSpanBeam& beam, Segment segment, double x) {
  if (segment == Segment::mirror) return 0.0;
  const double a = beam.junction, l = beam.span, f = beam.force;
  return f * a * (6.0 * (a + l) * x - 4.0 * (l * l + a * a + a * l)) / denominator(beam);
}

double deflection(const HalfSpanBeam& beam, double x) {
  beam.validate();
  check_range(beam, x);
  return segment_deflection(beam, x <= beam.junction ? Segment::mirror : Segment::beam, x);
}

double slope(const HalfSpanBeam& beam, double x) {
  beam.validate();
  check_range(beam, x);
  return segment_slope(beam, x <= beam.junction ? Segment::mirror : Segment::beam, x);
}

double tilt(const HalfSpanBeam& beam) {
  beam.validate();
  const double a = beam.junction, l = beam.span;
  const double c = l - a;
  return std::atan(beam.force * a * (c * c * c) / denominator(beam));
}

Extremum max_deflection(const HalfSpanBeam& beam) {
  beam.validate();
  const double a = beam.junction, l = beam.span;
  if (beam.force == 0.0) return {0.0, 0.0, a};

  const double y_edge = segment_deflection(beam, Segment::mirror, a);
  Extremum best{std::abs(y_edge), y_edge, a};

  // Stationary points of the beam segment: roots of
  //   3 (a + L) x^2 - 2 (2 L^2 + 2 a^2 + 2 a L) x + (L^3 + 4 a^2 L + a L^2) = 0.
  // One root is the clamp x = L; keep the one strictly inside (a, L).
  const double qa = 3.0 * (a + l);
  const double qb = -2.0 * (2.0 * l * l + 2.0 * a * a + 2.0 * a * l);
  const double qc = l * l * l + 4.0 * a * a * l + a * l * l;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc >= 0.0) {
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    for (double root : {q / qa, qc / q}) {
      if (root > a && root < l && std::abs(root - l) > 1e-12 * l) {
        const double y = segment_deflection(beam, Segment::beam, root);
        if (std::abs(y) > best.magnitude) best = {std::abs(y), y, root};
      }
    }
  }
  return best;
}

std::vector<ProfilePoint> device_profile(const HalfSpanBeam& beam, std::size_t samples) {
  beam.validate();
  if (samples < 2) throw ValidationError("scanner: profile needs at least 2 samples");
  const double l = beam.span;
  const std::size_t intervals = samples - 1;

  auto evaluate = [&](double u) -> ProfilePoint {
    const double y = u <= l ? deflection(beam, l - u) : -deflection(beam, u - l);
    return {u, y + 0.0};  // no negative zeros
  };

  std::vector<ProfilePoint> out;
  out.reserve(samples + 1);
  for (std::size_t k = 0; k < samples; ++k) {
    double u;
    if (2 * k == intervals) {
      u = l;
    } else if (k == intervals) {
      u = 2.0 * l;
    } else {
      u = 2.0 * l * static_cast<double>(k) / static_cast<double>(intervals);
    }
    if (intervals % 2 == 1 && 2 * k == intervals + 1) out.push_back(evaluate(l));
    out.push_back(evaluate(u));
  }
  return out;
}

double ScannerSolution::tilt_magnitude() const { return std::abs(tilt); }

HalfSpanBeam half_span_beam(const ScannerGeometry& geometry, double voltage) {
  geometry.validate();
  HalfSpanBeam beam{geometry.junction(), geometry.half_span(), equivalent_force(geometry.stack, voltage),
                    equivalent_section(geometry.stack).rigidity};
  beam.validate();
  return beam;
}

ScannerSolution solve_scanner(const ScannerGeometry& geometry, double voltage, std::size_t samples) {
  const HalfSpanBeam beam = half_span_beam(geometry, voltage);
  const Extremum peak = max_deflection(beam);
  ScannerSolution sol;
  sol.force = beam.force;
  sol.reaction = reaction(beam);
  sol.rigidity = beam.rigidity;
  sol.tilt = tilt(beam);
  sol.y_max = peak.magnitude;
  sol.y_at_max = peak.deflection;
  sol.x_at_ymax = peak.position;
  sol.profile = device_profile(beam, samples);
  return sol;
}

}  // namespace piezoscan
