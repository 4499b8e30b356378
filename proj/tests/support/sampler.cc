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


#include "sampler.h"

#include <algorithm>
#include <stdexcept>

namespace graphsens::test_support {

int GraphSampler::Uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool GraphSampler::Coin(double p) {
  return std::bernoulli_distribution(p)(rng_);
}

Graph GraphSampler::Random(int order, double p) {
  GraphBuilder builder(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (Coin(p)) builder.AddEdge(u, v);
    }
  }
  return std::move(builder).Build();
}

Graph GraphSampler::Sample(int lo, int hi) {
  const int order = Uniform(lo, hi);
  const double p = kEdgeProbabilities[Uniform(0, kEdgeProbabilities.size() - 1)];
  return Random(order, p);
}

Graph GraphSampler::SampleWithEdge(int lo, int hi) {
  if (hi < 2) throw std::invalid_argument("a graph with an edge needs 2 vertices");
  lo = std::max(lo, 2);
  for (;;) {
    Graph g = Sample(lo, hi);
    if (!g.IsEdgeless()) return g;
  }
}

}  // namespace graphsens::test_support
