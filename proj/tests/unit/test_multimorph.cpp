#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "piezoscan/errors.hpp"
#include "piezoscan/multimorph.hpp"
#include "piezoscan/verification.hpp"

using namespace piezoscan;

namespace {

// 5 um Si, 2 x 1 um PZT-5H, 30 um wide, 850 um long.
MultimorphStack reference_stack() { return {169e9, 5e-6, 60.6e9, 1e-6, -274e-12, 30e-6, 850e-6}; }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Classical laminate theory, independent of the interface-continuity
// formulation: with free strains e_i per layer, mid-plane strain e0 and
// curvature k solve
//   [A B; B D] [e0; k] = [sum E_i t_i e_i; sum E_i t_i z_i e_i]
// (z measured from the substrate bottom).
double laminate_curvature(const MultimorphStack& s, double v) {
  const double es = s.substrate_modulus, ts = s.substrate_thickness;
  const double ep = s.piezo_modulus, tp = s.piezo_thickness;
  const double free = s.d31 * v / tp;
  const double E[3] = {es, ep, ep}, t[3] = {ts, tp, tp}, z[3] = {ts / 2, ts + tp / 2, ts + 1.5 * tp};
  const double eps[3] = {0.0, -free, free};
  double A = 0, B = 0, D = 0, N = 0, M = 0;
  for (int i = 0; i < 3; ++i) {
    A += E[i] * t[i];
    B += E[i] * t[i] * z[i];
    D += E[i] * (t[i] * t[i] * t[i] / 12 + t[i] * z[i] * z[i]);
    N += E[i] * t[i] * eps[i];
    M += E[i] * t[i] * z[i] * eps[i];
  }
  return (A * M - B * N) / (A * D - B * B);
}

// Flexural rigidity by integrating E (z - h)^2 over each layer, h the
// modulus-weighted centroid; no reference modulus involved.
double integrated_rigidity(const MultimorphStack& s, double* neutral_axis = nullptr) {
  const double ts = s.substrate_thickness, tp = s.piezo_thickness;
  const double E[3] = {s.substrate_modulus, s.piezo_modulus, s.piezo_modulus};
  const double z0[3] = {0, ts, ts + tp}, z1[3] = {ts, ts + tp, ts + 2 * tp};
  double num = 0, den = 0;
  for (int i = 0; i < 3; ++i) {
    num += E[i] * (z1[i] * z1[i] - z0[i] * z0[i]) / 2;
    den += E[i] * (z1[i] - z0[i]);
  }
  const double h = num / den;
  if (neutral_axis) *neutral_axis = h;
  double ei = 0;
  for (int i = 0; i < 3; ++i) ei += E[i] * (std::pow(z1[i] - h, 3) - std::pow(z0[i] - h, 3)) / 3;
  return ei * s.width;
}

}  // namespace

TEST(Strains, Examples) {
  auto s = reference_stack();
  auto zero = piezo_strains(s, 0.0);
  EXPECT_EQ(zero.bottom, 0.0);
  EXPECT_EQ(zero.top, 0.0);

  const auto st = piezo_strains(s, 50.0);
  EXPECT_NEAR(st.bottom, 1.37e-2, 1e-15);
  EXPECT_NEAR(st.top, -1.37e-2, 1e-15);
  EXPECT_EQ(st.bottom, -st.top);

  s.d31 = 0.0;
  EXPECT_EQ(piezo_strains(s, 123.0).top, 0.0);
}

TEST(Curvature, ZeroDrive) {
  auto s = reference_stack();
  const auto sol = solve_curvature(s, 0.0);
  EXPECT_EQ(sol.p1, 0.0);
  EXPECT_EQ(sol.p2, 0.0);
  EXPECT_EQ(sol.p3, 0.0);
  EXPECT_EQ(sol.curvature, 0.0);

  s.d31 = 0.0;
  const auto none = solve_curvature(s, 80.0);
  EXPECT_EQ(none.curvature, 0.0);
  EXPECT_EQ(none.p1, 0.0);
}

TEST(Curvature, ReferenceStack) {
  const auto s = reference_stack();
  const auto sol = solve_curvature(s, 50.0);
  // Frozen from an independent symbolic solve of the four equations.
  EXPECT_NEAR(sol.curvature, -267.875456866819, 1e-9 * 267.9);
  EXPECT_LE(rel(sol.curvature, laminate_curvature(s, 50.0)), 1e-12);
  EXPECT_LE(std::abs(sol.p1 + sol.p2 + sol.p3),
            1e-9 * std::max({std::abs(sol.p1), std::abs(sol.p2), std::abs(sol.p3)}));
  for (double r : curvature_residuals(s, 50.0, sol)) EXPECT_LE(r, 1e-10);
}

TEST(Curvature, MatchesLaminateTheoryOnRandomStacks) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const auto s = verification::random_stack(rng);
    const double v = verification::random_voltage(rng);
    const auto sol = solve_curvature(s, v);
    EXPECT_LE(rel(sol.curvature, laminate_curvature(s, v)), 1e-10);
    for (double r : curvature_residuals(s, v, sol)) EXPECT_LE(r, 1e-10);
  }
}

TEST(Curvature, LinearAndOdd) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto s = verification::random_stack(rng);
    const double v = verification::random_voltage(rng);
    const auto a = solve_curvature(s, v);
    const auto doubled = solve_curvature(s, 2 * v);
    const auto negated = solve_curvature(s, -v);
    EXPECT_DOUBLE_EQ(doubled.curvature, 2 * a.curvature);
    EXPECT_DOUBLE_EQ(doubled.p2, 2 * a.p2);
    EXPECT_EQ(negated.curvature, -a.curvature);
    EXPECT_EQ(negated.p1, -a.p1);
    EXPECT_EQ(equivalent_force(s, -v), -equivalent_force(s, v));
    EXPECT_EQ(tip_deflection(s, -v), -tip_deflection(s, v));

    auto s2 = s;
    s2.d31 *= 2;
    EXPECT_DOUBLE_EQ(tip_deflection(s2, v), 2 * tip_deflection(s, v));
  }
}

TEST(TipDeflection, ReferenceStack) {
  const auto s = reference_stack();
  EXPECT_EQ(tip_deflection(s, 0.0), 0.0);
  const double y = tip_deflection(s, 50.0);
  EXPECT_NEAR(y, -9.67700087931383e-5, 1e-9 * 9.677e-5);
  EXPECT_LE(rel(y, tip_deflection_closed_form(s, 50.0)), 1e-10);
  EXPECT_DOUBLE_EQ(tip_deflection(s, 100.0), 2 * y);
}

TEST(EquivalentSection, ReferenceStack) {
  const auto s = reference_stack();
  const auto sec = equivalent_section(s);
  EXPECT_NEAR(sec.neutral_axis, 2.93903953632788e-6, 1e-18);
  EXPECT_NEAR(sec.rigidity, 9.29782828606914e-11, 1e-9 * 9.3e-11);
  EXPECT_EQ(sec.reference_modulus, 169e9);  // max(Es, Ep)

  double h = 0;
  const double ei = integrated_rigidity(s, &h);
  EXPECT_LE(rel(sec.rigidity, ei), 1e-12);
  EXPECT_LE(rel(sec.neutral_axis, h), 1e-12);

  const auto cf = equivalent_section_closed_form(s);
  EXPECT_LE(rel(sec.neutral_axis, cf.neutral_axis), 1e-12);
  EXPECT_LE(rel(sec.rigidity, cf.rigidity), 1e-12);
  EXPECT_GT(sec.neutral_axis, 0.0);
  EXPECT_LT(sec.neutral_axis, s.total_thickness());
}

TEST(EquivalentSection, NormalizationIndependence) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const auto s = verification::random_stack(rng);
    const auto a = equivalent_section(s, ReferenceModulus::substrate);
    const auto b = equivalent_section(s, ReferenceModulus::piezo);
    const auto c = equivalent_section(s, ReferenceModulus::max);
    EXPECT_LE(rel(a.rigidity, b.rigidity), 1e-12);
    EXPECT_LE(rel(a.rigidity, c.rigidity), 1e-12);
    EXPECT_LE(rel(a.neutral_axis, b.neutral_axis), 1e-12);
    EXPECT_LE(rel(c.rigidity, integrated_rigidity(s)), 1e-12);
  }
}

TEST(EquivalentSection, HomogeneousLimit) {
  auto s = reference_stack();
  s.piezo_thickness = 0.0;
  const auto bare = equivalent_section(s, ReferenceModulus::substrate);
  const double ts = s.substrate_thickness, w = s.width;
  EXPECT_DOUBLE_EQ(bare.neutral_axis, ts / 2);
  EXPECT_DOUBLE_EQ(bare.inertia, w * ts * ts * ts / 12);

  // Approaching the limit from valid stacks: inertia falls monotonically.
  double previous = std::numeric_limits<double>::infinity();
  for (double tp = 1e-6; tp > 1e-14; tp /= 10) {
    s.piezo_thickness = tp;
    const double i = equivalent_section(s, ReferenceModulus::substrate).inertia;
    EXPECT_LT(i, previous);
    EXPECT_GT(i, w * ts * ts * ts / 12);
    previous = i;
  }
  EXPECT_NEAR(previous, w * ts * ts * ts / 12, 1e-7 * w * ts * ts * ts / 12);
}

TEST(EquivalentSection, ThinSubstrateLimit) {
  auto s = reference_stack();
  s.substrate_thickness = 1e-12 * s.piezo_thickness;
  EXPECT_NEAR(equivalent_section(s).neutral_axis, s.piezo_thickness, 1e-9 * s.piezo_thickness);
}

TEST(EquivalentForce, ReferenceStack) {
  const auto s = reference_stack();
  EXPECT_EQ(equivalent_force(s, 0.0), 0.0);
  const double f = equivalent_force(s, 50.0);
  EXPECT_NEAR(f, -4.39528235294118e-5, 1e-9 * 4.395e-5);
  EXPECT_LE(rel(f, equivalent_force_closed_form(s, 50.0)), 1e-10);
  EXPECT_DOUBLE_EQ(equivalent_force(s, 100.0), 2 * f);
}

TEST(EquivalentForce, ClosedFormIdentityProperty) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 1000; ++i) {
    const auto s = verification::random_stack(rng);
    const double v = verification::random_voltage(rng);
    const double f = equivalent_force(s, v);
    EXPECT_LE(rel(f, equivalent_force_closed_form(s, v)), 1e-10);
    EXPECT_EQ(std::signbit(f), std::signbit(s.d31 * v));
  }
}

TEST(Multimorph, InvalidStackRejected) {
  auto s = reference_stack();
  s.width = -30e-6;
  EXPECT_THROW(solve_curvature(s, 1.0), ValidationError);
  s = reference_stack();
  s.piezo_thickness = 0.0;
  EXPECT_THROW(tip_deflection(s, 1.0), ValidationError);
  s = reference_stack();
  s.length = 0.0;
  EXPECT_THROW(equivalent_force(s, 1.0), ValidationError);
  s = reference_stack();
  s.substrate_modulus = std::nan("");
  EXPECT_THROW(equivalent_section(s), ValidationError);
}
