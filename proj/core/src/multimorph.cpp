#include "piezoscan/multimorph.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include "piezoscan/errors.hpp"
#include "piezoscan/linalg.hpp"

namespace piezoscan {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string("multimorph: ") + what + " must be positive");
}

double max_abs(std::initializer_list<double> terms) {
  double m = 0.0;
  for (double t : terms) m = std::max(m, std::abs(t));
  return m;
}

double relative(double residual, double scale) { return scale == 0.0 ? std::abs(residual) : std::abs(residual) / scale; }

double reference_value(const MultimorphStack& s, ReferenceModulus ref) {
  switch (ref) {
    case ReferenceModulus::substrate: return s.substrate_modulus;
    case ReferenceModulus::piezo: return s.piezo_modulus;
    case ReferenceModulus::max: return std::max(s.substrate_modulus, s.piezo_modulus);
  }
  return s.piezo_modulus;
}

void validate_section(const MultimorphStack& s) {
  require_positive(s.substrate_modulus, "substrate modulus");
  require_positive(s.substrate_thickness, "substrate thickness");
  require_positive(s.piezo_modulus, "piezo modulus");
  if (!(s.piezo_thickness >= 0.0) || !std::isfinite(s.piezo_thickness)) {
    throw ValidationError("multimorph: piezo thickness must be non-negative");
  }
  require_positive(s.width, "width");
}

// Common polynomial of the tip deflection and the rigidity.
double stack_polynomial(const MultimorphStack& s) {
  const double es = s.substrate_modulus, ts = s.substrate_thickness;
  const double ep = s.piezo_modulus, tp = s.piezo_thickness;
  return 8.0 * es * ts * ts * ts * ep * tp + 24.0 * es * ts * ts * ep * tp * tp + 32.0 * es * ts * ep * tp * tp * tp +
         es * es * ts * ts * ts * ts + 16.0 * ep * ep * tp * tp * tp * tp;
}

}  // namespace

void MultimorphStack::validate() const {
  require_positive(substrate_modulus, "substrate modulus");
  require_positive(substrate_thickness, "substrate thickness");
  require_positive(piezo_modulus, "piezo modulus");
  require_positive(piezo_thickness, "piezo thickness");
  require_positive(width, "width");
  require_positive(length, "length");
  if (!std::isfinite(d31)) throw ValidationError("multimorph: d31 must be finite");
}

Strains piezo_strains(const MultimorphStack& stack, double voltage) {
  stack.validate();
  const double s = stack.d31 * voltage / stack.piezo_thickness;
  return {-s, s};
}

CurvatureSolution solve_curvature(const MultimorphStack& stack, double voltage) {
  const Strains strain = piezo_strains(stack, voltage);
  const double es = stack.substrate_modulus, ts = stack.substrate_thickness;
  const double ep = stack.piezo_modulus, tp = stack.piezo_thickness;
  const double cs = 1.0 / (es * ts);  // axial compliance per unit width
  const double cp = 1.0 / (ep * tp);

  // Unknowns (P1, P2, P3, 1/R). Rows:
  //  force balance       P1 + P2 + P3 = 0
  //  moment balance      sum P_i z_i + (Es ts^3 + 2 Ep tp^3) / 12 / R = 0
  //  substrate|piezo 1   P1/(Es ts) + ts/(2R) = P2/(Ep tp) - tp/(2R) + S1
  //  piezo 1|piezo 2     S1 + P2/(Ep tp) + tp/(2R) = P3/(Ep tp) - tp/(2R) + S2
  const linalg::Matrix<4> a{{
      {1.0, 1.0, 1.0, 0.0},
      {0.5 * ts, ts + 0.5 * tp, ts + 1.5 * tp, (es * ts * ts * ts + 2.0 * ep * tp * tp * tp) / 12.0},
      {cs, -cp, 0.0, 0.5 * (ts + tp)},
      {0.0, cp, -cp, tp},
  }};
  const linalg::Vector<4> b{0.0, 0.0, strain.bottom, strain.top - strain.bottom};
  const auto x = linalg::solve(a, b);
  return {x[0], x[1], x[2], x[3]};
}

std::array<double, 4> curvature_residuals(const MultimorphStack& stack, double voltage,
                                          const CurvatureSolution& sol) {
  const Strains strain = piezo_strains(stack, voltage);
  const double es = stack.substrate_modulus, ts = stack.substrate_thickness;
  const double ep = stack.piezo_modulus, tp = stack.piezo_thickness;
  const double k = sol.curvature;

  std::array<double, 4> r{};
  r[0] = relative(sol.p1 + sol.p2 + sol.p3, max_abs({sol.p1, sol.p2, sol.p3}));

  const double m1 = 0.5 * ts * sol.p1, m2 = (ts + 0.5 * tp) * sol.p2, m3 = (ts + 1.5 * tp) * sol.p3;
  const double mb = (es * ts * ts * ts + 2.0 * ep * tp * tp * tp) / 12.0 * k;
  r[1] = relative(m1 + m2 + m3 + mb, max_abs({m1, m2, m3, mb}));

  const double lhs3 = sol.p1 / (es * ts) + 0.5 * ts * k;
  const double rhs3 = sol.p2 / (ep * tp) - 0.5 * tp * k + strain.bottom;
  r[2] = relative(lhs3 - rhs3, max_abs({sol.p1 / (es * ts), 0.5 * ts * k, sol.p2 / (ep * tp), 0.5 * tp * k,
                                        strain.bottom}));

  const double lhs4 = strain.bottom + sol.p2 / (ep * tp) + 0.5 * tp * k;
  const double rhs4 = sol.p3 / (ep * tp) - 0.5 * tp * k + strain.top;
  r[3] = relative(lhs4 - rhs4, max_abs({strain.bottom, sol.p2 / (ep * tp), 0.5 * tp * k, sol.p3 / (ep * tp),
                                        strain.top}));
  return r;
}

double tip_deflection(const MultimorphStack& stack, double voltage) {
  const CurvatureSolution sol = solve_curvature(stack, voltage);
  return 0.5 * sol.curvature * stack.length * stack.length;
}

double tip_deflection_closed_form(const MultimorphStack& stack, double voltage) {
  stack.validate();
  const double es = stack.substrate_modulus, ts = stack.substrate_thickness;
  const double ep = stack.piezo_modulus, tp = stack.piezo_thickness;
  const double l = stack.length;
  return 6.0 * l * l * ep * tp * stack.d31 * (es * ts + 2.0 * ep * tp) / stack_polynomial(stack) * voltage;
}

EquivalentSection equivalent_section(const MultimorphStack& stack, ReferenceModulus reference) {
  validate_section(stack);
  const double e_ref = reference_value(stack, reference);
  const double ts = stack.substrate_thickness, tp = stack.piezo_thickness;

  struct Layer {
    double modulus, thickness, mid_height;
  };
  const std::array<Layer, 3> layers{{
      {stack.substrate_modulus, ts, 0.5 * ts},
      {stack.piezo_modulus, tp, ts + 0.5 * tp},
      {stack.piezo_modulus, tp, ts + 1.5 * tp},
  }};

  // Neutral axis: centroid of the normalized areas W E_i/E_ref t_i.
  double area = 0.0, first_moment = 0.0;
  for (const auto& l : layers) {
    const double a = l.modulus / e_ref * l.thickness;
    area += a;
    first_moment += a * l.mid_height;
  }
  const double h = first_moment / area;

  double inertia = 0.0;
  for (const auto& l : layers) {
    const double d = h - l.mid_height;
    inertia += l.modulus / e_ref * (l.thickness * l.thickness * l.thickness / 12.0 + l.thickness * d * d);
  }
  inertia *= stack.width;
  return {h, inertia, e_ref, e_ref * inertia};
}

EquivalentSection equivalent_section_closed_form(const MultimorphStack& stack, ReferenceModulus reference) {
  validate_section(stack);
  const double e_ref = reference_value(stack, reference);
  const double es = stack.substrate_modulus, ts = stack.substrate_thickness;
  const double ep = stack.piezo_modulus, tp = stack.piezo_thickness;
  const double axial = es * ts + 2.0 * ep * tp;
  const double h = (ts * ts * es + 4.0 * tp * tp * ep + 4.0 * ts * tp * ep) / (2.0 * axial);
  const double rigidity = stack.width * stack_polynomial(stack) / (12.0 * axial);
  return {h, rigidity / e_ref, e_ref, rigidity};
}

double equivalent_force(const MultimorphStack& stack, double voltage) {
  const double y_tip = tip_deflection(stack, voltage);
  const double l = stack.length;
  return 3.0 * equivalent_section(stack).rigidity / (l * l * l) * y_tip;
}

double equivalent_force_closed_form(const MultimorphStack& stack, double voltage) {
  stack.validate();
  return 1.5 * stack.width * stack.piezo_thickness * stack.piezo_modulus * stack.d31 * voltage / stack.length;
}

}  // namespace piezoscan
