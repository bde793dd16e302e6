#include "afm/auxfield.hpp"
#include "afm/exact.hpp"
#include "afm/observables.hpp"
#include "afm/oracle.hpp"
#include "afm/overlaps.hpp"
#include "afm/specfun.hpp"

#include <benchmark/benchmark.h>

using namespace afm;

namespace {

void BM_AfmSolveLinear(benchmark::State& state) {
  const PotentialModel v = LinearPotential{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(afm_solve(v, AuxiliaryKind::Quadratic, {3, 2}).energy);
  }
}
BENCHMARK(BM_AfmSolveLinear);

void BM_AfmSolveExponential(benchmark::State& state) {
  const PotentialModel v = ExponentialPotential{20.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(afm_solve(v, AuxiliaryKind::Coulomb, {1, 0}).energy);
  }
}
BENCHMARK(BM_AfmSolveExponential);

void BM_AfmObservables(benchmark::State& state) {
  const PotentialModel v = LinearPotential{};
  const AfmSolution s = afm_solve(v, AuxiliaryKind::Coulomb, {2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(afm_observable_set(v, s, {2, 1}).p4);
  }
}
BENCHMARK(BM_AfmObservables);

void BM_AiryZero(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::airy_zero(n));
  }
}
BENCHMARK(BM_AiryZero)->Arg(0)->Arg(10)->Arg(200);

void BM_LambertW(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::lambert_w(specfun::WBranch::Principal, x));
    x = x < 100.0 ? x * 1.01 : 0.1;
  }
}
BENCHMARK(BM_LambertW);

void BM_HydrogenMoment(benchmark::State& state) {
  const QuantumNumbers q{static_cast<int>(state.range(0)), 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::hydrogen_moment(HydrogenScale{1.0}, q, 4));
  }
}
BENCHMARK(BM_HydrogenMoment)->Arg(0)->Arg(4)->Arg(10);

void BM_DilatedOverlap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(overlap_hydrogen_dilated(n, n + 1, 1, 1.3));
    benchmark::DoNotOptimize(overlap_oscillator_dilated(n, n + 1, 1, 1.3));
  }
}
BENCHMARK(BM_DilatedOverlap)->Arg(0)->Arg(5)->Arg(10);

void BM_SolveRadial(benchmark::State& state) {
  SolverConfig cfg;
  cfg.grid_points = static_cast<int>(state.range(0));
  const PotentialModel v = LinearPotential{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_radial(v, {2, 1}, cfg).energy);
  }
}
BENCHMARK(BM_SolveRadial)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_NumericObservables(benchmark::State& state) {
  const PotentialModel v = LogarithmicPotential{};
  const RadialFunction f = solve_radial(v, {1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_observables(f, v).p4);
  }
}
BENCHMARK(BM_NumericObservables)->Unit(benchmark::kMillisecond);

void BM_NumericOverlap(benchmark::State& state) {
  const PotentialModel v = LinearPotential{};
  const RadialFunction f = solve_radial(v, {0, 0});
  const AfmSolution s = afm_solve(v, AuxiliaryKind::Quadratic, {0, 0});
  const RadialFunction g = tabulate([&](double r) { return afm_radial(s, r); }, f.grid, s.energy, {0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_overlap(f, g));
  }
}
BENCHMARK(BM_NumericOverlap)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
