#include <benchmark/benchmark.h>

#include "dimeq/inducing.hpp"
#include "dimeq/root_system.hpp"
#include "dimeq/solver.hpp"
#include "dimeq/weyl.hpp"

using namespace dimeq;

static void BM_enumerate_tables_m2(benchmark::State& state) {
  const ParamRange params{1, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_tables(2, params));
  }
}
BENCHMARK(BM_enumerate_tables_m2)->Arg(4)->Arg(6)->Arg(8);

static void BM_enumerate_tables_m3(benchmark::State& state) {
  const ParamRange params{1, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_tables(3, params));
  }
}
BENCHMARK(BM_enumerate_tables_m3)->Arg(4)->Arg(6);

static void BM_match_tables_m2(benchmark::State& state) {
  const TableSet tables = enumerate_tables(2, {1, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_tables(tables));
  }
}
BENCHMARK(BM_match_tables_m2);

static void BM_partitions_dominating(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Partition base{std::vector<int>(6, p)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partitions_dominating(base, gl(6 * p)));
  }
}
BENCHMARK(BM_partitions_dominating)->Arg(3)->Arg(5);

static void BM_inducing_bruteforce(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Partition target{2 * p + 4, 2 * p - 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_inducing_data(GroupFamily::GSp, target));
  }
}
BENCHMARK(BM_inducing_bruteforce)->Arg(4)->Arg(8);

static void BM_admissible_scan(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const AdmissibilityContext ctx(p, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(admissible_set(ctx));
  }
}
BENCHMARK(BM_admissible_scan)->Arg(3)->Arg(4);

static void BM_unipotent_radical_dim(benchmark::State& state) {
  const RootSystem& e7 = RootSystem::get(RootSystemType::E7);
  const int levi[] = {2, 5, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(unipotent_radical_dim(e7, std::span<const int>(levi)));
  }
}
BENCHMARK(BM_unipotent_radical_dim);

BENCHMARK_MAIN();
