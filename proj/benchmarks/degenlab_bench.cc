// Copyright 2026 The Degenlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "degenlab/degen_protocol.h"
#include "degenlab/gadget.h"
#include "degenlab/graph.h"
#include "degenlab/hpc.h"
#include "degenlab/reduction.h"

namespace degenlab {
namespace {

void BM_Peel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  Graph g = gnp_graph(n, 16.0 / n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(peel(g).degeneracy);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_Peel)->RangeMultiplier(4)->Range(256, 16384);

void BM_DecideFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  Graph g = gnp_graph(n, 0.25, rng);
  EdgePartition p = random_partition(g, rng);
  const int k = degeneracy(g);
  std::size_t bits = 0;
  for (auto _ : state) {
    DecisionRun run = degen_decide_fast(p, k);
    bits = run.ledger.bits_total();
  }
  state.counters["bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_DecideFast)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_DecideSqrt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  Graph g = gnp_graph(n, 0.25, rng);
  EdgePartition p = random_partition(g, rng);
  const int k = degeneracy(g);
  std::size_t bits = 0;
  for (auto _ : state) {
    DecisionRun run = degen_decide_sqrt(p, k);
    bits = run.ledger.bits_total();
  }
  state.counters["bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_DecideSqrt)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_BuildGadget(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  Rng rng(4);
  MHPCInstance inst = sample_bmhpc(m, r, rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_gadget(inst).graph.num_edges());
}
BENCHMARK(BM_BuildGadget)->ArgsProduct({{4, 8, 16, 32}, {1, 3}})->Unit(benchmark::kMillisecond);

void BM_TraceInvariants(benchmark::State& state) {
  Rng rng(5);
  MHPCInstance inst = sample_bmhpc(static_cast<int>(state.range(0)), 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(trace_invariants(inst).trace_ok);
}
BENCHMARK(BM_TraceInvariants)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace degenlab

BENCHMARK_MAIN();
