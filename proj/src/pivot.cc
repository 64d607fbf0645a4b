// Copyright 2026 The Atompivot Authors
//
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

#include "atompivot/pivot.h"

#include <algorithm>

#include "atompivot/check_macros.h"

namespace atompivot {

std::vector<VertexId> PivotStep(const Graph& g, Rng& rng) {
  AP_CHECK(!g.empty(), "PivotStep: empty graph");
  const auto live = g.LiveVertices();
  const VertexId pivot = live[UniformIndex(rng, live.size())];
  const VertexSet& nbhd = g.Neighborhood(pivot);
  std::vector<VertexId> cluster;
  cluster.reserve(nbhd.size());
  cluster.push_back(pivot);
  for (VertexId v : nbhd) {
    if (v != pivot) cluster.push_back(v);
  }
  // Hash-set order is not reproducible; downstream randomness depends on it.
  std::sort(cluster.begin() + 1, cluster.end());
  return cluster;
}

PivotRun RunPivot(Graph& g, Rng& rng) {
  PivotRun run{Clustering(g.initial_vertex_count()), {}};
  while (!g.empty()) {
    std::vector<VertexId> cluster = PivotStep(g, rng);
    run.steps.push_back(StepCost(g, cluster));
    g.RemoveCluster(cluster);
    run.clustering.AddCluster(std::move(cluster));
  }
  return run;
}

}  // namespace atompivot
