#include "piezoscan/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "piezoscan/oracle.hpp"
#include "piezoscan/sweep.hpp"

namespace piezoscan::verification {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

double random_sign(std::mt19937_64& rng) { return std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0; }

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Check make(std::string name, double value, double tolerance, bool upper_bound = true, std::string detail = {}) {
  const bool ok = std::isfinite(value) && (upper_bound ? value <= tolerance : value >= tolerance);
  return {std::move(name), value, tolerance, ok, std::move(detail)};
}

}  // namespace

MultimorphStack random_stack(std::mt19937_64& rng) {
  MultimorphStack s;
  s.substrate_thickness = log_uniform(rng, 0.5e-6, 50e-6);
  s.piezo_thickness = log_uniform(rng, 0.1e-6, 10e-6);
  s.width = log_uniform(rng, 5e-6, 500e-6);
  s.length = log_uniform(rng, 50e-6, 5000e-6);
  s.substrate_modulus = uniform(rng, 50e9, 400e9);
  s.piezo_modulus = uniform(rng, 20e9, 200e9);
  s.d31 = random_sign(rng) * uniform(rng, 10e-12, 600e-12);
  return s;
}

double random_voltage(std::mt19937_64& rng) { return random_sign(rng) * uniform(rng, 1.0, 200.0); }

HalfSpanBeam random_beam(std::mt19937_64& rng) {
  HalfSpanBeam b;
  b.junction = log_uniform(rng, 10e-6, 500e-6);
  b.span = b.junction + log_uniform(rng, 50e-6, 3000e-6);
  b.rigidity = log_uniform(rng, 1e-13, 1e-8);
  b.force = random_sign(rng) * log_uniform(rng, 1e-7, 1e-3);
  return b;
}

double ProfileResiduals::max() const {
  return std::max({support_deflection, clamp_deflection, clamp_slope, junction_deflection, junction_slope,
                   mirror_curvature, tilt_slope});
}

ProfileResiduals profile_residuals(const HalfSpanBeam& beam) {
  const double y_max = max_deflection(beam).magnitude;
  const double a = beam.junction, l = beam.span;
  ProfileResiduals r;
  r.support_deflection = std::abs(deflection(beam, 0.0)) / y_max;
  r.clamp_deflection = std::abs(deflection(beam, l)) / y_max;
  r.clamp_slope = std::abs(slope(beam, l)) * l / y_max;
  r.junction_deflection =
      std::abs(segment_deflection(beam, Segment::mirror, a) - segment_deflection(beam, Segment::beam, a)) / y_max;
  r.junction_slope =
      std::abs(segment_slope(beam, Segment::mirror, a) - segment_slope(beam, Segment::beam, a)) * l / y_max;

  constexpr int samples = 64;
  const double h = a / samples;
  for (int i = 1; i < samples; ++i) {
    const double x = i * h;
    const double second = deflection(beam, x - h) - 2.0 * deflection(beam, x) + deflection(beam, x + h);
    r.mirror_curvature = std::max(r.mirror_curvature, std::abs(second) / y_max);
  }

  const double s0 = std::abs(slope(beam, 0.0));
  r.tilt_slope = s0 == 0.0 ? 0.0 : std::abs(std::abs(std::tan(tilt(beam))) - s0) / s0;
  return r;
}

std::vector<Check> run_all(const Options& options) {
  std::vector<Check> checks;
  std::mt19937_64 rng(options.seed);

  double force_identity = 0.0, tip_identity = 0.0, residual = 0.0, normalization = 0.0, section = 0.0;
  for (std::size_t i = 0; i < options.random_stacks; ++i) {
    const MultimorphStack s = random_stack(rng);
    const double v = random_voltage(rng);
    force_identity = std::max(force_identity, rel(equivalent_force(s, v), equivalent_force_closed_form(s, v)));
    tip_identity = std::max(tip_identity, rel(tip_deflection(s, v), tip_deflection_closed_form(s, v)));
    for (double r : curvature_residuals(s, v, solve_curvature(s, v))) residual = std::max(residual, r);
    const double ei_s = equivalent_section(s, ReferenceModulus::substrate).rigidity;
    const double ei_p = equivalent_section(s, ReferenceModulus::piezo).rigidity;
    const double ei_m = equivalent_section(s, ReferenceModulus::max).rigidity;
    normalization = std::max({normalization, rel(ei_s, ei_p), rel(ei_s, ei_m), rel(ei_p, ei_m)});
    section = std::max(section, rel(ei_m, equivalent_section_closed_form(s).rigidity));
  }
  const std::string n_stacks = std::to_string(options.random_stacks) + " random stacks";
  checks.push_back(make("force_identity", force_identity, 1e-10, true, n_stacks));
  checks.push_back(make("tip_deflection_identity", tip_identity, 1e-10, true, n_stacks));
  checks.push_back(make("curvature_residuals", residual, 1e-10, true, n_stacks));
  checks.push_back(make("normalization_independence", normalization, 1e-12, true, n_stacks));
  checks.push_back(make("section_closed_form", section, 1e-12, true, n_stacks));

  double profile = 0.0;
  for (std::size_t i = 0; i < options.random_geometries; ++i) profile = std::max(profile, profile_residuals(random_beam(rng)).max());
  checks.push_back(make("profile_invariants", profile, 1e-12, true,
                        std::to_string(options.random_geometries) + " random geometries"));

  // Oracle comparison on the reference device.
  const ScannerDesign ref = reference_design();
  const HalfSpanBeam beam = half_span_beam(ref.geometry(), ref.voltage);
  oracle::BeamProblem problem{beam.span, beam.junction, beam.force, beam.rigidity, options.nodes, std::nullopt};
  const oracle::OracleSolution fd = oracle::solve_fd(problem);
  const HalfSpanBeam snapped = oracle::closed_form_beam(problem, fd);
  const std::string at_nodes = std::to_string(options.nodes) + " nodes";
  checks.push_back(make("oracle_profile", oracle::max_norm_error(problem, fd) / max_deflection(snapped).magnitude,
                        5e-3, true, at_nodes));
  checks.push_back(make("oracle_reaction", rel(fd.reaction, reaction(snapped)), 5e-3, true, at_nodes));
  checks.push_back(make("oracle_tilt", rel(fd.tilt(), tilt(snapped)), 5e-3, true, at_nodes));

  const std::array<std::size_t, 3> counts{101, 201, 401};
  const oracle::ConvergenceStudy study = oracle::convergence_study(problem, counts);
  std::ostringstream errs;
  for (std::size_t i = 0; i < study.nodes.size(); ++i) errs << (i ? " " : "errors:") << study.errors[i];
  checks.push_back(make("convergence_order", study.min_order(), 1.8, false, errs.str()));

  oracle::BeamProblem half = problem;
  half.junction = 0.5 * half.span;
  const oracle::OracleSolution fd_half = oracle::solve_fd(half);
  checks.push_back(make("half_span_reaction", rel(fd_half.reaction, -5.0 / 14.0 * half.force), 5e-3, true,
                        "a = L/2, expected -5F/14"));

  oracle::BeamProblem stiff = problem;
  stiff.mirror_rigidity_ratio = 1e6;
  checks.push_back(make("finite_mirror_rigidity", rel(oracle::solve_fd(stiff).tilt(), fd.tilt()), 1e-4, true,
                        "mirror rigidity 1e6 x beam"));

  // Tabulated devices: tilt (deg) and y_max (um) at 50 V.
  constexpr std::array<double, 3> tilt_ref{0.57, 0.48, 0.42};
  constexpr std::array<double, 3> ymax_ref{2.45e-6, 1.76e-6, 1.48e-6};
  const auto rows = table1(ref);
  constexpr std::array<const char*, 3> label{"A", "B", "C"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    checks.push_back(make(std::string("table1_") + label[i] + "_tilt",
                          std::abs(rows[i].tilt_deg - tilt_ref[i]) / tilt_ref[i], 0.15, true,
                          "phi_deg=" + std::to_string(rows[i].tilt_deg)));
    checks.push_back(make(std::string("table1_") + label[i] + "_y_max",
                          std::abs(rows[i].y_max - ymax_ref[i]) / ymax_ref[i], 0.15, true,
                          "y_max_um=" + std::to_string(rows[i].y_max * 1e6)));
  }
  return checks;
}

}  // namespace piezoscan::verification
