#include "piezoscan/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "piezoscan/errors.hpp"

namespace piezoscan {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double rad_to_deg = 180.0 / std::numbers::pi;

double objective_value(const ScannerDesign& design, Objective objective) {
  const HalfSpanBeam beam = half_span_beam(design.geometry(), design.voltage);
  if (objective == Objective::tilt) return std::abs(tilt(beam)) * rad_to_deg;
  return max_deflection(beam).magnitude;
}

}  // namespace

SweepAxis parse_axis(std::string_view name) {
  for (auto axis : {SweepAxis::beam_length, SweepAxis::beam_width, SweepAxis::substrate_thickness,
                    SweepAxis::piezo_thickness, SweepAxis::mirror_side, SweepAxis::voltage}) {
    if (axis_name(axis) == name) return axis;
  }
  throw ValidationError("sweep: unknown axis '" + std::string(name) +
                        "' (expected beam_length, beam_width, substrate_thickness, piezo_thickness, "
                        "mirror_side or voltage)");
}

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::beam_length: return "beam_length";
    case SweepAxis::beam_width: return "beam_width";
    case SweepAxis::substrate_thickness: return "substrate_thickness";
    case SweepAxis::piezo_thickness: return "piezo_thickness";
    case SweepAxis::mirror_side: return "mirror_side";
    case SweepAxis::voltage: return "voltage";
  }
  return "?";
}

ScannerDesign with_parameter(ScannerDesign base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::beam_length: base.beam_length = value; break;
    case SweepAxis::beam_width: base.beam_width = value; break;
    case SweepAxis::substrate_thickness: base.substrate_thickness = value; break;
    case SweepAxis::piezo_thickness: base.piezo_thickness = value; break;
    case SweepAxis::mirror_side: base.mirror_side = value; break;
    case SweepAxis::voltage: base.voltage = value; break;
  }
  return base;
}

void SweepSpec::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
    throw ValidationError("sweep: range must satisfy from < to");
  }
  if (steps < 2) throw ValidationError("sweep: steps must be >= 2");
}

std::vector<double> SweepSpec::points() const {
  validate();
  std::vector<double> out(steps);
  const double intervals = static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) out[k] = from + (to - from) * (static_cast<double>(k) / intervals);
  out.back() = to;
  return out;
}

SweepRecord evaluate(const ScannerDesign& design, double value) {
  SweepRecord rec;
  rec.value = value;
  try {
    const ScannerGeometry geometry = design.geometry();
    const HalfSpanBeam beam = half_span_beam(geometry, design.voltage);
    rec.tilt_deg = std::abs(tilt(beam)) * rad_to_deg;
    rec.y_max = max_deflection(beam).magnitude;
    rec.force = beam.force;
    rec.reaction = reaction(beam);
  } catch (const Error& e) {
    rec.tilt_deg = rec.y_max = rec.force = rec.reaction = nan;
    rec.status = e.what();
  }
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
  const std::vector<double> values = spec.points();
  std::vector<SweepRecord> records(values.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < values.size(); i += stride) {
      records[i] = evaluate(with_parameter(spec.base, spec.axis, values[i]), values[i]);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, values.size());
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  return records;
}

Optimum optimize_1d(const SweepSpec& spec, Objective objective) {
  const std::vector<double> grid = spec.points();
  auto eval = [&](double v) { return objective_value(with_parameter(spec.base, spec.axis, v), objective); };

  std::vector<double> scores(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    scores[i] = eval(grid[i]);
    if (scores[i] > scores[best]) best = i;
  }
  Optimum result{grid[best], scores[best]};

  // Golden-section search in [grid[best-1], grid[best+1]], clipped at the ends.
  double lo = grid[best == 0 ? 0 : best - 1];
  double hi = grid[std::min(best + 1, grid.size() - 1)];
  const double tolerance = 1e-4 * (spec.to - spec.from);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = eval(x1), f2 = eval(x2);
  auto consider = [&](double x, double f) {
    if (f > result.objective || (f == result.objective && x < result.value)) result = {x, f};
  };
  consider(x1, f1);
  consider(x2, f2);
  while (hi - lo > tolerance) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = eval(x1);
      consider(x1, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = eval(x2);
      consider(x2, f2);
    }
  }
  return result;
}

std::vector<SweepRecord> table1(const ScannerDesign& base) {
  std::vector<SweepRecord> rows;
  for (double length : table1_beam_lengths) {
    rows.push_back(evaluate(with_parameter(base, SweepAxis::beam_length, length), length));
  }
  return rows;
}

}  // namespace piezoscan
