#include <benchmark/benchmark.h>

#include "isochron/analyzer.hpp"
#include "isochron/period_law.hpp"
#include "isochron/series_core.hpp"

using namespace isochron;

namespace {

const PiecewiseSystem kCaseV(HomogeneousPoly(3, {0, 1, 0, 0}), HomogeneousPoly(3, {0, 0, 0, 1}));

void BM_LambdaTable(benchmark::State& state) {
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_lambda_table(jmax));
}
BENCHMARK(BM_LambdaTable)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ReversionOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reversion_oracle(8, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ReversionOracle)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GPowerIntegral(benchmark::State& state) {
  const HomogeneousPoly p(5, {1, -2, 3, 0, 1, 2});
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_power_integral(p, j, ArcRange::upper));
}
BENCHMARK(BM_GPowerIntegral)->Arg(1)->Arg(4)->Arg(8);

void BM_CombinedSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(combined_period_series(kCaseV, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CombinedSeries)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_HalfOrbit(benchmark::State& state) {
  const double r0 = 0.01 * static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(half_orbit(kCaseV, Side::upper, r0));
}
BENCHMARK(BM_HalfOrbit)->Arg(1)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_Quadrature(benchmark::State& state) {
  const double r0 = 0.01 * static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_period(kCaseV, Side::upper, r0));
}
BENCHMARK(BM_Quadrature)->Arg(1)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_FindWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(kCaseV, 1e-6, 0.4, 64));
}
BENCHMARK(BM_FindWitness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
