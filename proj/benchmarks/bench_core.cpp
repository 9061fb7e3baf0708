#include <benchmark/benchmark.h>

#include <cmath>

#include "beurling/numerics.hpp"
#include "beurling/number_system.hpp"
#include "beurling/tauberian.hpp"
#include "beurling/zeta.hpp"

namespace {

using namespace beurling;

void BM_EnumerateFourPrimes(benchmark::State& state) {
  const auto system = from_explicit_primes({1.3, 2.0, 3.7, 5.1}, "bench");
  const double x_max = static_cast<double>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    auto n = integer_counting_function(system, x_max);
    count = n.size();
    benchmark::DoNotOptimize(n);
  }
  state.counters["integers"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateFourPrimes)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_SieveClassical(benchmark::State& state) {
  const double x_max = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_classical(x_max));
}
BENCHMARK(BM_SieveClassical)->RangeMultiplier(10)->Range(10000, 10000000)->Unit(benchmark::kMillisecond);

void BM_ZetaDirichletClassical(benchmark::State& state) {
  const ZetaEvaluator zeta(sieve_classical(1e6), 1e6);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta.dirichlet({1.5, t}));
    t += 0.01;
  }
}
BENCHMARK(BM_ZetaDirichletClassical)->Unit(benchmark::kMillisecond);

void BM_LogDerivativeClassical(benchmark::State& state) {
  const ZetaEvaluator zeta(sieve_classical(1e6), 1e6);
  for (auto _ : state) benchmark::DoNotOptimize(zeta.log_derivative({2.0, 3.0}));
}
BENCHMARK(BM_LogDerivativeClassical)->Unit(benchmark::kMillisecond);

void BM_MollifierPsiClassical(benchmark::State& state) {
  const double x_log = std::log(1e6);
  const XSignal s = XSignal::from_steps(psi_log_scale(sieve_classical(1e6), x_log), x_log);
  const Kernel kernel = make_kernel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mollifier_convolution(s, kernel, 10.0, 1.0));
}
BENCHMARK(BM_MollifierPsiClassical)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SlowDecreaseProfile(benchmark::State& state) {
  const XSignal s = XSignal::from_function([](double x) { return std::exp(x) * (1.0 + std::sin(x)); });
  const auto grid = numerics::linspace(0.0, 20.0, 401);
  for (auto _ : state) benchmark::DoNotOptimize(slow_decrease_profile(s, 0.25, grid));
}
BENCHMARK(BM_SlowDecreaseProfile)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
