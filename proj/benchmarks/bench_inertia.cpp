#include <benchmark/benchmark.h>

#include "sylvester/bounds.hpp"
#include "sylvester/eigcore.hpp"
#include "sylvester/matcore.hpp"
#include "sylvester/nep.hpp"

using namespace sylvester;

static void BM_LdltInertia(benchmark::State& state) {
  const auto m = gen_random_symmetric(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ldlt_inertia(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LdltInertia)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

static void BM_EigenvalueInertia(benchmark::State& state) {
  const auto m = gen_random_symmetric(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue_inertia(m));
}
BENCHMARK(BM_EigenvalueInertia)->RangeMultiplier(2)->Range(32, 512);

static void BM_PencilBounds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pencil_bounds({300, 0, 200}, {450, 0, 50}, 500));
}
BENCHMARK(BM_PencilBounds);

static void BM_SpringCount(benchmark::State& state) {
  const auto slice = polynomial_slice(gen_spring_quadratic(static_cast<int>(state.range(0)), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(nep_interval_lower(slice, -14, -3.3));
}
BENCHMARK(BM_SpringCount)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
