#include <benchmark/benchmark.h>

#include <cstdint>

#include "cliquesim/engine.hpp"
#include "cliquesim/topology.hpp"
#include "cliquesim/verify.hpp"

namespace {

using namespace cliquesim;

// One synchronous round of a settled clique: the densest steady-state
// message load (every node talks to its neighbors every round).
void BM_StepRoundLegalClique(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  NetworkState warm = generate({.kind = TopologyKind::clique_legal, .n = n});
  // Warm the buffers so every iteration routes a full round of traffic.
  step_round(warm);
  for (auto _ : state) {
    NetworkState net = warm;
    TraceRecord rec = step_round(net);
    benchmark::DoNotOptimize(rec.messages_delivered);
  }
  state.SetComplexityN(static_cast<std::int64_t>(n));
}

// Full stabilization of a line start, the longest-diameter topology.
void BM_StabilizeLine(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const NetworkState start = generate({.kind = TopologyKind::line, .n = n});
  for (auto _ : state) {
    NetworkState net = start;
    RunOptions opts;
    opts.max_rounds = 100 * n + 1000;
    RunResult res = run(net, opts);
    benchmark::DoNotOptimize(res.stopped_at);
  }
  state.SetComplexityN(static_cast<std::int64_t>(n));
}

void BM_IsLegal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const NetworkState net =
      generate({.kind = TopologyKind::clique_legal, .n = n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_legal(net));
  }
  state.SetComplexityN(static_cast<std::int64_t>(n));
}

BENCHMARK(BM_StepRoundLegalClique)->RangeMultiplier(2)->Range(8, 256)->Complexity();
BENCHMARK(BM_StabilizeLine)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_IsLegal)->RangeMultiplier(2)->Range(8, 256)->Complexity();

}  // namespace

BENCHMARK_MAIN();
