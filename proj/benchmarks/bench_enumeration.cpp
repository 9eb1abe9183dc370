#include <benchmark/benchmark.h>

#include <vector>

#include "nsg/enumeration.hpp"
#include "nsg/hyperelliptic.hpp"
#include "nsg/profile.hpp"
#include "nsg/sumsets.hpp"
#include "nsg/weights.hpp"

using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

void BM_TreeWalk(benchmark::State& state) {
  const Int g = state.range(0);
  Int count = 0;
  for (auto _ : state) {
    count = 0;
    nsg::enumerate_up_to(g, [&](const NumericalSemigroup&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["semigroups"] = static_cast<double>(count);
  state.counters["rate"] =
      benchmark::Counter(static_cast<double>(count), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_TreeWalk)->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);

void BM_BruteForceOracle(benchmark::State& state) {
  const Int g = state.range(0);
  for (auto _ : state) {
    auto all = nsg::brute_force_enumerate(g);
    benchmark::DoNotOptimize(all.data());
  }
}
BENCHMARK(BM_BruteForceOracle)->DenseRange(7, 11, 2)->Unit(benchmark::kMillisecond);

void BM_ProfileAndWeight(benchmark::State& state) {
  std::vector<NumericalSemigroup> pool;
  nsg::enumerate_genus(12, [&](const NumericalSemigroup& h) { pool.push_back(h); });
  for (auto _ : state) {
    Int acc = 0;
    for (const auto& h : pool) {
      const auto p = nsg::profile(h);
      acc += nsg::weight(h, p).w + (nsg::hyperelliptic_gamma(p) ? 1 : 0);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<Int>(pool.size()));
}
BENCHMARK(BM_ProfileAndWeight);

void BM_FromGenerators(benchmark::State& state) {
  for (auto _ : state) {
    auto h = NumericalSemigroup::from_generators({5, 18});
    benchmark::DoNotOptimize(h.genus());
  }
}
BENCHMARK(BM_FromGenerators);

void BM_ResidueSumset(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({5, 18});
  for (auto _ : state) {
    auto r = nsg::residue_sumset_bound(h, 5);
    benchmark::DoNotOptimize(r.n);
  }
}
BENCHMARK(BM_ResidueSumset);

void BM_ParallelSweep(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<Int> acc(static_cast<std::size_t>(jobs) * 64, 0);
    nsg::parallel_enumerate(20, jobs, [&](int worker, const NumericalSemigroup& h) {
      acc[static_cast<std::size_t>(worker) * 64] += nsg::weight(h).w;
    });
    Int total = 0;
    for (std::size_t i = 0; i < acc.size(); i += 64) total += acc[i];
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ParallelSweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)
    ->MeasureProcessCPUTime()->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
