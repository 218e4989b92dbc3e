// Serial vs OpenMP timings for the parallel kernels. The argument is the
// thread count; 1 selects the serial code paths.

#include <benchmark/benchmark.h>

#include "revlex/builders.hpp"
#include "revlex/fixtures.hpp"
#include "revlex/koszul.hpp"
#include "revlex/oracle.hpp"
#include "revlex/scan.hpp"
#include "revlex/toric.hpp"

namespace {

using namespace revlex;

void BM_OrderingScan(benchmark::State& state) {
  const auto config = example17_config();
  const auto toric = toric_ideal(config);
  const Parallelism par{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto out = scan_all_revlex(toric.elements(), config.num_gens(), first_non_squarefree_initial, par);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_OrderingScan)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SampledScan(benchmark::State& state) {
  // Compressed, so no ordering stops the scan early.
  const auto config = example17_config();
  const auto toric = toric_ideal(config);
  const auto orderings = sample_orderings(config.num_gens(), 500, 1);
  const Parallelism par{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto out = scan_revlex_orderings(toric.elements(), orderings, first_non_squarefree_initial, par);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SampledScan)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_DecideStronglyKoszul(benchmark::State& state) {
  // Not squarefree, so every pair is checked.
  const auto config = veronese(3, 3);
  const auto toric = toric_ideal(config);
  const Parallelism par{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto report = decide_strongly_koszul(config, toric.elements(), par);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_DecideStronglyKoszul)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto config = stable_set_config(SimpleGraph::empty(4));
  OracleOptions opts;
  opts.cap = 4;
  opts.par = Parallelism{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto r = oracle_strongly_koszul(config, opts);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
