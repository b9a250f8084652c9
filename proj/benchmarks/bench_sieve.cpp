#include <benchmark/benchmark.h>

#include <random>

#include "gplab/sieve.hpp"
#include "gplab/verifier.hpp"

namespace {

void BM_BuildSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto t = gplab::SieveTable::build(limit);
    benchmark::DoNotOptimize(t.prime_count(limit));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_BuildSieve)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_PrimeCountQuery(benchmark::State& state) {
  static const gplab::SieveTable table = gplab::SieveTable::build(10'000'000);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> dist(0, table.limit());
  for (auto _ : state) benchmark::DoNotOptimize(table.prime_count(dist(rng)));
}
BENCHMARK(BM_PrimeCountQuery);

void BM_PrimeCountMod4Query(benchmark::State& state) {
  static const gplab::SieveTable table = gplab::SieveTable::build(10'000'000);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> dist(0, table.limit());
  for (auto _ : state)
    benchmark::DoNotOptimize(table.prime_count_mod4(dist(rng), 1));
}
BENCHMARK(BM_PrimeCountMod4Query);

void BM_Sweep(benchmark::State& state) {
  gplab::SweepConfig cfg;
  cfg.k_lo = 2;
  cfg.k_hi = 16;
  cfg.generator_bound = 8;
  cfg.parallelism = static_cast<unsigned>(state.range(0));
  static const gplab::SieveTable table =
      gplab::SieveTable::build(gplab::required_sieve_limit(cfg));
  for (auto _ : state) {
    auto report = gplab::sweep(cfg, table);
    benchmark::DoNotOptimize(report.failures);
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
