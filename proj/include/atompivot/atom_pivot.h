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

#ifndef ATOMPIVOT_ATOM_PIVOT_H_
#define ATOMPIVOT_ATOM_PIVOT_H_

#include <functional>
#include <ostream>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "atompivot/atom_finder.h"
#include "atompivot/goodness.h"
#include "atompivot/graph.h"
#include "atompivot/random.h"

namespace atompivot {

enum class StepKind {
  kAtom,       // a reported cluster, rounded or removed as-is
  kPivot,      // closed neighborhood of a uniform pivot
  kSingleton,  // leftover vertex once no cluster can be reported
};

absl::string_view StepKindName(StepKind kind);

struct RunSummary {
  int64_t steps = 0;
  int64_t atom_steps = 0;
  int64_t pivot_steps = 0;
  int64_t singleton_steps = 0;
  int64_t total_cost = 0;
  double wall_ms = 0;
  AtomFinderStats finder;
};

struct ClusteringRun {
  Clustering clustering;
  std::vector<StepAccounting> steps;
  std::vector<StepKind> kinds;
  // For atom steps, the reported cluster before expansion and rounding.
  std::vector<std::vector<VertexId>> reported;
  RunSummary summary;
};

struct RunOptions {
  // Pop one copy per loop iteration instead of draining runs of copies with
  // AtomFinder::AdvanceToReport. Same output distribution, much slower.
  bool single_pops = false;
  // Called before every removal with the graph in its pre-removal state.
  std::function<void(const Graph&, StepKind)> before_step;
  std::ostream* event_log = nullptr;
};

// The merged algorithm. While the graph is nonempty: if the copy queue is
// nonempty, pop a copy and try to report a cluster K; a reported K is
// expanded with eps' = ReportedGoodnessBound(gp), rounded by SampleCluster
// and removed. If the queue is empty, a pivot step is removed instead. Every
// removal feeds its boundary events back to the finder. Consumes `g`.
// Fails unless gp is valid with eps' < 1/6.
absl::StatusOr<ClusteringRun> RunAtomPivot(Graph& g, const GoodnessParams& gp,
                                           Rng& rng,
                                           const RunOptions& options = {});

// Atom finding alone: reported clusters are removed as they are; once the
// queue is empty, every remaining vertex becomes a singleton.
absl::StatusOr<ClusteringRun> RunAtomOnly(Graph& g, const GoodnessParams& gp,
                                          Rng& rng,
                                          const RunOptions& options = {});

// RunPivot with the same bookkeeping as the two runs above.
ClusteringRun RunPivotBaseline(Graph& g, Rng& rng,
                               const RunOptions& options = {});

}  // namespace atompivot

#endif  // ATOMPIVOT_ATOM_PIVOT_H_
