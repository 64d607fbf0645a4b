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

#ifndef ATOMPIVOT_PIVOT_H_
#define ATOMPIVOT_PIVOT_H_

#include <vector>

#include "atompivot/graph.h"
#include "atompivot/random.h"

namespace atompivot {

// Closed neighborhood of a pivot drawn uniformly from the live vertices. Does
// not modify `g`. Requires `g` nonempty.
std::vector<VertexId> PivotStep(const Graph& g, Rng& rng);

struct PivotRun {
  Clustering clustering;
  std::vector<StepAccounting> steps;
};

// The classic pivot algorithm: pivot, remove the cluster, repeat until the
// graph is empty. Consumes `g`.
PivotRun RunPivot(Graph& g, Rng& rng);

}  // namespace atompivot

#endif  // ATOMPIVOT_PIVOT_H_
