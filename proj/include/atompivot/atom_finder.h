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

#ifndef ATOMPIVOT_ATOM_FINDER_H_
#define ATOMPIVOT_ATOM_FINDER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "atompivot/check.h"
#include "atompivot/goodness.h"
#include "atompivot/graph.h"
#include "atompivot/random.h"

namespace atompivot {

// Copies added for a vertex of closed degree d in an n-vertex graph when the
// finder starts:
//   ceil(2(1 + delta) ln n / max(1, ln(d / (1 + delta))))
uint64_t InitialCopies(int64_t degree, int64_t n, double delta);

// Copies added each time an edge of v is deleted, with d its degree right
// after the deletion:
//   ceil(2(1 + delta) ln n / (delta d max(1, ln(d / (1 + delta)))))
uint64_t HitCopies(int64_t degree_after, int64_t n, double delta);

// Multiset of vertex copies, popped last-in-first-out. Consecutive copies
// pushed together are stored as one run.
class CopyQueue {
 public:
  void Push(VertexId v, uint64_t copies);
  bool empty() const { return total_ == 0; }
  uint64_t size() const { return total_; }
  VertexId Top() const;
  // Copies left in the run on top of the stack.
  uint64_t TopRun() const;
  VertexId Pop();
  // Pops `copies` copies from the top run. Requires copies <= TopRun().
  void PopTop(uint64_t copies);

 private:
  struct Run {
    VertexId vertex;
    uint64_t copies;
  };
  std::vector<Run> runs_;
  uint64_t total_ = 0;
};

struct ReportResult {
  enum class Kind { kFound, kPopped, kQueueEmpty };
  Kind kind = Kind::kQueueEmpty;
  // The reported cluster when kind == kFound.
  std::vector<VertexId> cluster;
  // Copies consumed to produce this result.
  uint64_t pops = 0;
};

struct AtomFinderStats {
  uint64_t initial_copies = 0;
  uint64_t copies_enqueued = 0;  // includes initial copies
  uint64_t pops = 0;
  uint64_t dead_pops = 0;
  uint64_t checks = 0;
  uint64_t checks_passed = 0;
  uint64_t reports = 0;
  // Samples the checks performed, counted as the literal procedure would
  // draw them.
  double check_draws = 0;
  // Adjacency probes actually spent evaluating checks and cleans.
  int64_t probes = 0;
};

// Reports good clusters of a graph that loses clusters over time. The finder
// only reads the graph; whoever removes a cluster must pass the resulting
// boundary events to OnClusterRemoved before the next report attempt.
//
// A popped copy of a live vertex v runs Check(v) and, if it passes,
// Clean(N(v)); a nonempty result is reported. Reported clusters are
// ReportedGoodnessBound(params)-good.
class AtomFinder {
 public:
  // Seeds InitialCopies for every live vertex, in increasing id order.
  static absl::StatusOr<AtomFinder> Create(const Graph& g,
                                           const GoodnessParams& params);

  AtomFinder(AtomFinder&&) = default;
  AtomFinder& operator=(AtomFinder&&) = default;

  // Pops exactly one copy.
  ReportResult TryReport(Rng& rng);

  // Same as calling TryReport until it returns kFound or kQueueEmpty (the
  // intermediate kPopped results change no state), but consumes runs of
  // copies in bulk: a run of c copies of v succeeds for the first time after
  // a geometric number of pops with success probability
  // P[Check(v)] * [Clean(N(v)) != {}].
  ReportResult AdvanceToReport(Rng& rng);

  // Enqueues HitCopies(degree_after) copies per event, in event order.
  void OnClusterRemoved(std::span<const BoundaryEvent> events);

  const GoodnessParams& params() const { return params_; }
  const CleanParams& clean_params() const { return clean_params_; }
  const CopyQueue& queue() const { return queue_; }
  const AtomFinderStats& stats() const { return stats_; }
  int64_t n() const { return n_; }

  // One line per pop outcome when set.
  void set_event_log(std::ostream* log) { log_ = log; }

 private:
  AtomFinder(const Graph& g, const GoodnessParams& params,
             const CleanParams& clean_params);

  CheckDistribution& CheckFor(VertexId v);
  const std::vector<VertexId>& CleanFor(VertexId v);
  void Invalidate(VertexId v);

  const Graph* graph_;
  GoodnessParams params_;
  CleanParams clean_params_;
  int64_t n_;
  CopyQueue queue_;
  AtomFinderStats stats_;
  // Per-vertex memo of Check's distribution and of Clean(N(v)); dropped
  // whenever N(v) or N(u) for some u in N(v) changes.
  std::vector<std::unique_ptr<CheckDistribution>> check_memo_;
  std::vector<std::optional<std::vector<VertexId>>> clean_memo_;
  std::vector<uint32_t> touched_stamp_;
  uint32_t stamp_ = 0;
  std::ostream* log_ = nullptr;
};

}  // namespace atompivot

#endif  // ATOMPIVOT_ATOM_FINDER_H_
