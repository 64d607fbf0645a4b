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

#include "atompivot/synth.h"

#include <vector>

#include "absl/strings/str_format.h"
#include "atompivot/check_macros.h"
#include "atompivot/graph_io.h"
#include "atompivot/random.h"

namespace atompivot {

absl::StatusOr<PlantedInstance> GeneratePlanted(int64_t n, int64_t k,
                                                double eps_noise, uint64_t seed) {
  if (n < 1 || k < 1 || !(eps_noise >= 0 && eps_noise <= 1)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "planted instance needs n >= 1, k >= 1, eps in [0,1]; got n=%d k=%d "
        "eps=%g",
        n, k, eps_noise));
  }
  Rng rng(seed);
  std::vector<int64_t> label(n);
  for (int64_t v = 0; v < n; ++v) {
    label[v] = static_cast<int64_t>(UniformIndex(rng, static_cast<uint64_t>(k)));
  }
  std::vector<Edge> edges;
  int64_t flips = 0;
  for (int64_t u = 0; u < n; ++u) {
    for (int64_t v = u + 1; v < n; ++v) {
      bool edge = label[u] == label[v];
      if (Uniform01(rng) < eps_noise) {
        edge = !edge;
        ++flips;
      }
      if (edge) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  absl::StatusOr<Graph> graph = Graph::FromEdges(n, edges);
  if (!graph.ok()) return graph.status();
  PlantedInstance inst;
  inst.graph = *std::move(graph);
  inst.planted = Clustering::FromAssignment(label);
  inst.n = n;
  inst.k = k;
  inst.eps_noise = eps_noise;
  inst.seed = seed;
  inst.flips = flips;
  return inst;
}

int64_t PlantedCost(const PlantedInstance& inst) {
  absl::StatusOr<int64_t> cost = ClusteringCost(inst.graph, inst.planted);
  AP_CHECK(cost.ok(), "PlantedCost: planted clustering does not cover the graph");
  return *cost;
}

absl::Status WritePlantedInstance(const PlantedInstance& inst,
                                  const std::string& path) {
  if (absl::Status s = WriteEdgeListFile(inst.graph, path); !s.ok()) return s;
  return WriteClusteringFile(inst.planted, path + ".planted");
}

}  // namespace atompivot
