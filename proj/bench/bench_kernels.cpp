// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "platfill/dga.hpp"
#include "platfill/front.hpp"
#include "platfill/linearization.hpp"
#include "platfill/sweep.hpp"

namespace {

platfill::Differential figure_one_differential() {
  const auto t = platfill::parse_tuple("[3,(6,2),2,(2,0),4]");
  const auto f = platfill::build_front(t);
  return platfill::differential(f, platfill::orient(f));
}

void BM_AugmentationsParallel(benchmark::State& state) {
  const auto d = figure_one_differential();
  for (auto _ : state) benchmark::DoNotOptimize(platfill::enumerate_augmentations(d));
}

void BM_AugmentationsSerial(benchmark::State& state) {
  const auto d = figure_one_differential();
  for (auto _ : state) benchmark::DoNotOptimize(platfill::enumerate_augmentations_serial(d));
}

void BM_CrosscheckParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(platfill::crosscheck(n));
}

void BM_CrosscheckSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(platfill::crosscheck_serial(n));
}

}  // namespace

BENCHMARK(BM_AugmentationsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AugmentationsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrosscheckParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrosscheckSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
