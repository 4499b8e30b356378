// Copyright 2026 The graphsens Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "graphsens/constructions.h"
#include "graphsens/families.h"
#include "graphsens/graph6.h"
#include "graphsens/sensitivity.h"
#include "graphsens/stable_blocks.h"

namespace graphsens {
namespace {

Graph Family(const char* name, std::vector<int> ints) {
  return BuildFamily(name, FamilyArgs{std::move(ints), {}});
}

void BM_HypercubeSensitivity(benchmark::State& state) {
  const Graph g = Family("hypercube", {static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(Sensitivity(g));
}
BENCHMARK(BM_HypercubeSensitivity)->DenseRange(2, 5);

void BM_HammingProfile(benchmark::State& state) {
  const Graph g = Family("hamming", {2, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(Profile(g));
}
BENCHMARK(BM_HammingProfile)->DenseRange(3, 5);

void BM_ConeSensitivity(benchmark::State& state) {
  const Graph g = Cone(static_cast<int>(state.range(0)), Family("cycle", {5}));
  for (auto _ : state) benchmark::DoNotOptimize(Sensitivity(g));
}
BENCHMARK(BM_ConeSensitivity)->DenseRange(4, 16, 4);

void BM_OracleSensitivity(benchmark::State& state) {
  const Graph g = Family("hypercube", {3});
  for (auto _ : state) benchmark::DoNotOptimize(OracleKSensitivity(g, 1));
}
BENCHMARK(BM_OracleSensitivity);

void BM_MaximumCriticalIndependentSet(benchmark::State& state) {
  const Graph g = Corona(Family("cycle", {static_cast<int>(state.range(0))}),
                         CompleteGraph(2));
  for (auto _ : state) benchmark::DoNotOptimize(MaximumCriticalIndependentSet(g));
}
BENCHMARK(BM_MaximumCriticalIndependentSet)->DenseRange(3, 7, 2);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = Family("hypercube", {static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(ReadGraph6(WriteGraph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->DenseRange(4, 8, 2);

}  // namespace
}  // namespace graphsens

BENCHMARK_MAIN();
