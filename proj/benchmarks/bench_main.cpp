#include <benchmark/benchmark.h>

#include "hardylab/counting.hpp"
#include "hardylab/dirichlet_series.hpp"
#include "hardylab/operator_lab.hpp"
#include "hardylab/special_functions.hpp"

using namespace hardylab;

static void BM_ZetaComplex(benchmark::State& state) {
  cplx s(1.3, 7.0);
  for (auto _ : state) benchmark::DoNotOptimize(zeta(s));
}
BENCHMARK(BM_ZetaComplex);

static void BM_ExpSeries(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DirichletSeries f(n);
  for (std::size_t k = 2; k <= n; ++k) f[k] = 1.0 / double(k * k);
  for (auto _ : state) benchmark::DoNotOptimize(exp_series(f));
}
BENCHMARK(BM_ExpSeries)->Arg(256)->Arg(4096);

static void BM_BuildMatrix(benchmark::State& state) {
  const Symbol s = make_affine(1.0, 0.25);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(s, n, 4096));
}
BENCHMARK(BM_BuildMatrix)->Arg(16)->Arg(64);

static void BM_SingularValues(benchmark::State& state) {
  const OperatorMatrix m = build_matrix(make_disk_lift(Polynomial({1.0, 0.25, 0.125})), 64, 4096);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(m));
}
BENCHMARK(BM_SingularValues);

static void BM_ExactCounting(benchmark::State& state) {
  const Symbol s = make_disk_lift(Polynomial({1.0, 0.25, 0.125}));
  for (auto _ : state) benchmark::DoNotOptimize(mean_counting_exact_disk(s, cplx(1.1, 0.05)));
}
BENCHMARK(BM_ExactCounting);

static void BM_StripCounting(benchmark::State& state) {
  const Symbol s = make_disk_lift(Polynomial({1.0, 0.25, 0.125}));
  for (auto _ : state) benchmark::DoNotOptimize(mean_counting(s, cplx(1.1, 0.05)));
}
BENCHMARK(BM_StripCounting)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
