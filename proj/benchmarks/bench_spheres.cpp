#include <lunezeta/spheres.hpp>

#include <benchmark/benchmark.h>

using namespace lunezeta;

static void BM_Invariants(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_invariants_at(dim, 2.5, Route::A));
}
BENCHMARK(BM_Invariants)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_InvariantsBothRoutes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeta_invariants_at(2, 2.5, Route::Both));
}
BENCHMARK(BM_InvariantsBothRoutes)->Unit(benchmark::kMillisecond);

static void BM_Spectrum(benchmark::State& state) {
  const DeformedSphere s = DeformedSphere::from_k(3, 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spectrum(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Spectrum)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
