#include <benchmark/benchmark.h>

#include <casimir1d/casimir1d.hpp>

using namespace casimir1d;

static void BM_KernelClosedForm(benchmark::State& state) {
  double q = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_unchecked(q, 1.3));
    q = q < 50.0 ? q * 1.01 : 0.37;
  }
}
BENCHMARK(BM_KernelClosedForm);

static void BM_CoefficientsLinearSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coefficients_linear_solve(0.8, 1.3));
}
BENCHMARK(BM_CoefficientsLinearSolve);

static void BM_CosineIntegral(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cosine_integral(x));
    x = x < 1e4 ? x * 1.1 : 0.01;
  }
}
BENCHMARK(BM_CosineIntegral);

static void BM_ForceCanonical(benchmark::State& state) {
  const DimensionlessPoint p{1.0, static_cast<double>(state.range(0)) / 10.0};
  for (auto _ : state) benchmark::DoNotOptimize(force(p, Method::canonical));
}
BENCHMARK(BM_ForceCanonical)->Arg(0)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_ForceLifshitz(benchmark::State& state) {
  const DimensionlessPoint p{1.0, static_cast<double>(state.range(0)) / 10.0};
  for (auto _ : state) benchmark::DoNotOptimize(force(p, Method::lifshitz));
}
BENCHMARK(BM_ForceLifshitz)->Arg(0)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_EntropyDensity(benchmark::State& state) {
  const double dtilde = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entropy_density_canonical(dtilde, 1.0));
}
BENCHMARK(BM_EntropyDensity)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

static void BM_EntropyCanonical(benchmark::State& state) {
  EntropyOptions o;
  o.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entropy_canonical({1.0, 1.0}, 100.0, o));
}
BENCHMARK(BM_EntropyCanonical)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
