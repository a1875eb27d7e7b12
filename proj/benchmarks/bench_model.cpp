#include <benchmark/benchmark.h>

#include "piezoscan/design.hpp"
#include "piezoscan/multimorph.hpp"
#include "piezoscan/oracle.hpp"
#include "piezoscan/scanner.hpp"
#include "piezoscan/sweep.hpp"

using namespace piezoscan;

static void BM_SolveCurvature(benchmark::State& state) {
  const MultimorphStack stack = reference_design().stack();
  double v = 50.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_curvature(stack, v));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_SolveCurvature);

static void BM_EquivalentForce(benchmark::State& state) {
  const MultimorphStack stack = reference_design().stack();
  for (auto _ : state) benchmark::DoNotOptimize(equivalent_force(stack, 50.0));
}
BENCHMARK(BM_EquivalentForce);

static void BM_SolveScanner(benchmark::State& state) {
  const ScannerDesign d = reference_design();
  const ScannerGeometry g = d.geometry();
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_scanner(g, d.voltage, samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolveScanner)->Arg(3)->Arg(401)->Arg(10001);

static void BM_OracleSolve(benchmark::State& state) {
  const ScannerDesign d = reference_design();
  const HalfSpanBeam b = half_span_beam(d.geometry(), d.voltage);
  oracle::BeamProblem p{b.span, b.junction, b.force, b.rigidity, static_cast<std::size_t>(state.range(0)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::solve_fd(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleSolve)->Arg(101)->Arg(401)->Arg(2001)->Arg(16001)->Complexity(benchmark::oN);

static void BM_RunSweep(benchmark::State& state) {
  const SweepSpec spec{reference_design(), SweepAxis::beam_length, 200e-6, 2000e-6, 1001};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, threads));
}
BENCHMARK(BM_RunSweep)->Arg(1)->Arg(4)->UseRealTime();

static void BM_Optimize(benchmark::State& state) {
  const SweepSpec spec{reference_design(), SweepAxis::mirror_side, 50e-6, 5000e-6, 21};
  for (auto _ : state) benchmark::DoNotOptimize(optimize_1d(spec, Objective::tilt));
}
BENCHMARK(BM_Optimize);
BENCHMARK_MAIN();
