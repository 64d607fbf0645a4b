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

#ifndef ATOMPIVOT_SYNTH_H_
#define ATOMPIVOT_SYNTH_H_

#include <cstdint>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "atompivot/graph.h"

namespace atompivot {

struct PlantedInstance {
  Graph graph;
  // The planted partition; clusters that received no vertex are dropped.
  Clustering planted;
  int64_t n = 0;
  int64_t k = 0;
  double eps_noise = 0;
  uint64_t seed = 0;
  // Pairs whose adjacency was flipped by the noise.
  int64_t flips = 0;
};

// Assigns each vertex to one of k clusters uniformly at random, makes every
// cluster a clique, then flips each of the n(n-1)/2 pairs independently with
// probability eps_noise, visiting pairs in lexicographic order. Same
// arguments always give the same instance.
absl::StatusOr<PlantedInstance> GeneratePlanted(int64_t n, int64_t k,
                                                double eps_noise, uint64_t seed);

// Disagreements of the planted partition on the noisy graph.
int64_t PlantedCost(const PlantedInstance& inst);

// Writes the graph as an edge list at `path` and the planted partition as a
// clustering at `path` + ".planted".
absl::Status WritePlantedInstance(const PlantedInstance& inst,
                                  const std::string& path);

}  // namespace atompivot

#endif  // ATOMPIVOT_SYNTH_H_
