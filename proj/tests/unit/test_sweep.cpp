#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "piezoscan/errors.hpp"
#include "piezoscan/sweep.hpp"

using namespace piezoscan;

namespace {

SweepSpec length_spec(std::size_t steps = 8) { return {reference_design(), SweepAxis::beam_length, 500e-6, 850e-6, steps}; }

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

TEST(SweepSpec, PointsAreInclusiveAndOrdered) {
  const auto pts = length_spec(8).points();
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_EQ(pts.front(), 500e-6);
  EXPECT_EQ(pts.back(), 850e-6);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_GT(pts[i], pts[i - 1]);
}

TEST(SweepSpec, Rejections) {
  SweepSpec s = length_spec();
  s.to = s.from;
  EXPECT_THROW(run_sweep(s), ValidationError);
  s = length_spec(1);
  EXPECT_THROW(run_sweep(s), ValidationError);
  EXPECT_THROW(parse_axis("beam_height"), ValidationError);
  EXPECT_EQ(parse_axis("mirror_side"), SweepAxis::mirror_side);
}

TEST(Table1, WithinFifteenPercentAndOrdered) {
  const auto rows = table1();
  ASSERT_EQ(rows.size(), 3u);
  const double tilt[3] = {0.57, 0.48, 0.42}, ymax[3] = {2.45e-6, 1.76e-6, 1.48e-6};
  for (int i = 0; i < 3; ++i) {
    ASSERT_TRUE(rows[i].ok()) << rows[i].status;
    EXPECT_NEAR(rows[i].tilt_deg, tilt[i], 0.15 * tilt[i]);
    EXPECT_NEAR(rows[i].y_max, ymax[i], 0.15 * ymax[i]);
  }
  EXPECT_GT(rows[0].tilt_deg, rows[1].tilt_deg);
  EXPECT_GT(rows[1].tilt_deg, rows[2].tilt_deg);
  EXPECT_GT(rows[0].y_max, rows[1].y_max);
  EXPECT_GT(rows[1].y_max, rows[2].y_max);
  // Frozen from an independent evaluation of the closed forms.
  EXPECT_NEAR(rows[0].tilt_deg, 0.5319742417015908, 1e-9);
  EXPECT_NEAR(rows[1].tilt_deg, 0.44558197825029044, 1e-9);
  EXPECT_NEAR(rows[2].tilt_deg, 0.3978426785962523, 1e-9);
  EXPECT_NEAR(rows[1].y_max, 1.6466179517082218e-6, 1e-15);
  EXPECT_NEAR(rows[2].y_max, 1.3781065178042706e-6, 1e-15);
}

TEST(RunSweep, VoltageLinearity) {
  const SweepSpec s{reference_design(), SweepAxis::voltage, 0.0, 50.0, 3};
  const auto r = run_sweep(s);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].tilt_deg, 0.0);
  EXPECT_EQ(r[0].force, 0.0);
  const double to_rad = std::acos(-1.0) / 180.0;
  EXPECT_NEAR(std::tan(r[2].tilt_deg * to_rad), 2 * std::tan(r[1].tilt_deg * to_rad), 1e-14);
}

TEST(RunSweep, DeterministicAcrossThreadCounts) {
  const SweepSpec s = length_spec(97);
  const auto serial = run_sweep(s, 1);
  const auto parallel = run_sweep(s, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_TRUE(bit_equal(serial[i].value, parallel[i].value));
    EXPECT_TRUE(bit_equal(serial[i].tilt_deg, parallel[i].tilt_deg));
    EXPECT_TRUE(bit_equal(serial[i].y_max, parallel[i].y_max));
    EXPECT_TRUE(bit_equal(serial[i].force, parallel[i].force));
    EXPECT_TRUE(bit_equal(serial[i].reaction, parallel[i].reaction));
    EXPECT_EQ(serial[i].status, parallel[i].status);
  }
}

TEST(RunSweep, FailedPointsAreReportedInline) {
  const SweepSpec s{reference_design(), SweepAxis::piezo_thickness, -1e-6, 1e-6, 3};
  const auto r = run_sweep(s);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_FALSE(r[0].ok());
  EXPECT_FALSE(r[1].ok());
  EXPECT_TRUE(std::isnan(r[0].tilt_deg));
  EXPECT_NE(r[0].status.find("piezo thickness"), std::string::npos);
  EXPECT_TRUE(r[2].ok());
  EXPECT_TRUE(std::isfinite(r[2].tilt_deg));
}

TEST(Optimize, MonotoneBeamLengthPicksUpperEnd) {
  const auto best = optimize_1d(length_spec(8), Objective::tilt);
  EXPECT_EQ(best.value, 850e-6);
  EXPECT_NEAR(best.objective, 0.5319742417015908, 1e-9);
  const auto by_ymax = optimize_1d(length_spec(8), Objective::y_max);
  EXPECT_EQ(by_ymax.value, 850e-6);
}

TEST(Optimize, MonotoneVoltagePicksUpperEnd) {
  const SweepSpec s{reference_design(), SweepAxis::voltage, 0.0, 50.0, 6};
  EXPECT_EQ(optimize_1d(s, Objective::tilt).value, 50.0);
}

TEST(Optimize, FlatObjectiveTiesToSmallestParameter) {
  SweepSpec s = length_spec(5);
  s.base.piezo.d31 = 0.0;
  const auto best = optimize_1d(s, Objective::tilt);
  EXPECT_EQ(best.value, 500e-6);
  EXPECT_EQ(best.objective, 0.0);
}

TEST(Optimize, InteriorMaximumOverMirrorSide) {
  // Tilt vanishes for a tiny and for a huge mirror, so there is an interior
  // optimum. Brute-force it on a fine grid.
  const SweepSpec s{reference_design(), SweepAxis::mirror_side, 50e-6, 20000e-6, 9};
  const auto best = optimize_1d(s, Objective::tilt);

  double brute_x = 0, brute_f = -1;
  for (int i = 0; i <= 200000; ++i) {
    const double x = s.from + (s.to - s.from) * i / 200000.0;
    const double f = evaluate(with_parameter(s.base, s.axis, x), x).tilt_deg;
    if (f > brute_f) brute_f = f, brute_x = x;
  }
  EXPECT_GE(best.objective, brute_f * (1 - 1e-7));
  EXPECT_NEAR(best.value, brute_x, 1e-3 * (s.to - s.from));

  for (double x : s.points()) EXPECT_GE(best.objective, evaluate(with_parameter(s.base, s.axis, x), x).tilt_deg);
}
