#include <lunezeta/specfun.hpp>

#include <benchmark/benchmark.h>

using namespace lunezeta;

static void BM_LnGammaComplex(benchmark::State& state) {
  const Complex z(0.75, 3.5);
  for (auto _ : state) benchmark::DoNotOptimize(specfun::ln_gamma(z));
}
BENCHMARK(BM_LnGammaComplex);

static void BM_HurwitzZeta(benchmark::State& state) {
  double s = -2.5;
  for (auto _ : state) benchmark::DoNotOptimize(specfun::hurwitz_zeta(s, 1.3));
}
BENCHMARK(BM_HurwitzZeta);

static void BM_HurwitzZetaDs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::hurwitz_zeta_ds(-1.0, 0.7));
}
BENCHMARK(BM_HurwitzZetaDs);

BENCHMARK_MAIN();
