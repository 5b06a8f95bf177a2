// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "seqlab/analysis.hpp"
#include "seqlab/dynamics.hpp"
#include "seqlab/partition.hpp"
#include "seqlab/sieve.hpp"

using namespace seqlab;

static void BM_CensusSerial(benchmark::State& state) {
  const auto w = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_serial(MapSpec::reverse_subtract(w), pow10_u64(w - 1), pow10_u64(w) - 1));
  }
}
BENCHMARK(BM_CensusSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CensusParallel(benchmark::State& state) {
  const auto w = static_cast<unsigned>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(MapSpec::reverse_subtract(w), pow10_u64(w - 1), pow10_u64(w) - 1, jobs));
  }
}
BENCHMARK(BM_CensusParallel)
    ->ArgsProduct({{5, 6}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond);

static void BM_SpdsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spds_enumerate_serial(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SpdsSerial)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_SpdsParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        spds_enumerate(static_cast<std::uint64_t>(state.range(0)), static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_SpdsParallel)->ArgsProduct({{20000}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);

static void BM_ErdosSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(erdos_smarandache_serial(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_ErdosSerial)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_ErdosParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        erdos_smarandache(static_cast<std::uint64_t>(state.range(0)), static_cast<int>(state.range(1))));
  }
}
BENCHMARK(BM_ErdosParallel)->ArgsProduct({{100000}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
