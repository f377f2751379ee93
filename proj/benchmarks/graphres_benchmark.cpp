// Copyright 2026 The graphres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "graphres/isomorphism.hpp"
#include "graphres/likelihood.hpp"
#include "graphres/machines.hpp"
#include "graphres/randomness.hpp"
#include "graphres/trees.hpp"
#include "graphres/verify.hpp"

namespace graphres {
namespace {

void BM_CanonicalFormRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 64; ++seed) graphs.push_back(sample_gnp(n, 0.5, seed));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalFormRandom)->DenseRange(6, 10, 2);

void BM_CanonicalFormComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormComplete)->Arg(10);

void BM_LikelihoodExact(benchmark::State& state) {
  const Graph g = sample_gnp(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(likelihood_exact(g));
}
BENCHMARK(BM_LikelihoodExact)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_LikelihoodExtremes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(likelihood_extremes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LikelihoodExtremes)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Construct(benchmark::State& state) {
  const RuleSet rule{Action::kDominateAll, Action::kJoinLabel1};
  const InstructionString x = InstructionString::from_index(0x5a5a5a5aULL, 32);
  for (auto _ : state) benchmark::DoNotOptimize(construct(rule, MemoryModel::full(), x));
}
BENCHMARK(BM_Construct);

void BM_VerifyProposition(benchmark::State& state) {
  const auto id = static_cast<PropositionId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_proposition(id, 7));
}
BENCHMARK(BM_VerifyProposition)
    ->DenseRange(0, 4)
    ->Unit(benchmark::kMillisecond);

void BM_SampleGnp(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_gnp(n, 0.3, rng));
}
BENCHMARK(BM_SampleGnp)->Arg(64)->Arg(256);

void BM_SampleVertexAddition(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_vertex_addition(n, DegreeDistributionSpec::uniform(), rng));
  }
}
BENCHMARK(BM_SampleVertexAddition)->Arg(64)->Arg(256);

void BM_PruferRoundTrip(benchmark::State& state) {
  const RootedTree t = sample_ua(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(prufer_decode(prufer_encode(t.graph())));
}
BENCHMARK(BM_PruferRoundTrip)->Arg(100)->Arg(1000);

}  // namespace
}  // namespace graphres

BENCHMARK_MAIN();
