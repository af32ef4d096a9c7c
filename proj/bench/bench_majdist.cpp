// Serial reference vs OpenMP kernels: maj distribution over a Delannoy
// family and the full verification sweep.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "latticeq/stats.hpp"
#include "latticeq/verify.hpp"

namespace {

using namespace latticeq;

// Largest Del(n,n,l) cells swept at n = 8..10.
const PathFamily& family_for(std::int64_t n) {
  static const PathFamily families[] = {PathFamily::del(8, 8, 14), PathFamily::del(9, 9, 15),
                                        PathFamily::del(10, 10, 17)};
  return families[n - 8];
}

void BM_MajDistributionSerial(benchmark::State& state) {
  const PathFamily& f = family_for(state.range(0));
  const StepOrder order = StepOrder::parse("E<N<D");
  for (auto _ : state) benchmark::DoNotOptimize(maj_distribution_serial(f, order));
}

void BM_MajDistributionParallel(benchmark::State& state) {
  const PathFamily& f = family_for(state.range(0));
  const StepOrder order = StepOrder::parse("E<N<D");
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(maj_distribution(f, order));
}

void BM_VerifySweep(benchmark::State& state) {
  VerifyOptions options;
  options.n_max = state.range(0);
  options.parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(options));
}

}  // namespace

BENCHMARK(BM_MajDistributionSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MajDistributionParallel)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySweep)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
