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

#include "atompivot/atom_pivot.h"

#include <chrono>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "atompivot/pivot.h"
#include "atompivot/rounding.h"

namespace atompivot {
namespace {

class RunRecorder {
 public:
  RunRecorder(Graph& g, const RunOptions& options)
      : g_(g),
        options_(options),
        start_(std::chrono::steady_clock::now()) {
    run_.clustering = Clustering(g.initial_vertex_count());
  }

  // Accounts for and removes `cluster`; returns the boundary events.
  std::vector<BoundaryEvent> Remove(std::vector<VertexId> cluster,
                                    StepKind kind) {
    if (options_.before_step) options_.before_step(g_, kind);
    StepAccounting step = StepCost(g_, cluster);
    run_.summary.total_cost += step.alg_cost;
    ++run_.summary.steps;
    switch (kind) {
      case StepKind::kAtom: ++run_.summary.atom_steps; break;
      case StepKind::kPivot: ++run_.summary.pivot_steps; break;
      case StepKind::kSingleton: ++run_.summary.singleton_steps; break;
    }
    std::vector<BoundaryEvent> events = g_.RemoveCluster(cluster);
    run_.steps.push_back(std::move(step));
    run_.kinds.push_back(kind);
    run_.clustering.AddCluster(std::move(cluster));
    return events;
  }

  void AddReported(std::vector<VertexId> reported) {
    run_.reported.push_back(std::move(reported));
  }

  ClusteringRun Finish(const AtomFinderStats* stats) {
    run_.summary.wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
    if (stats != nullptr) run_.summary.finder = *stats;
    return std::move(run_);
  }

 private:
  Graph& g_;
  const RunOptions& options_;
  std::chrono::steady_clock::time_point start_;
  ClusteringRun run_;
};

ReportResult NextReport(AtomFinder& finder, Rng& rng, const RunOptions& options) {
  return options.single_pops ? finder.TryReport(rng)
                             : finder.AdvanceToReport(rng);
}

}  // namespace

absl::string_view StepKindName(StepKind kind) {
  switch (kind) {
    case StepKind::kAtom: return "atom";
    case StepKind::kPivot: return "pivot";
    case StepKind::kSingleton: return "singleton";
  }
  return "unknown";
}

absl::StatusOr<ClusteringRun> RunAtomPivot(Graph& g, const GoodnessParams& gp,
                                           Rng& rng,
                                           const RunOptions& options) {
  absl::StatusOr<double> eps_prime = ReportedGoodnessBound(gp);
  if (!eps_prime.ok()) return eps_prime.status();
  if (!(*eps_prime < 1.0 / 6.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "reported goodness %g must be < 1/6 for rounding", *eps_prime));
  }
  absl::StatusOr<AtomFinder> finder = AtomFinder::Create(g, gp);
  if (!finder.ok()) return finder.status();
  finder->set_event_log(options.event_log);

  RunRecorder recorder(g, options);
  while (!g.empty()) {
    std::vector<VertexId> cluster;
    StepKind kind;
    if (!finder->queue().empty()) {
      ReportResult report = NextReport(*finder, rng, options);
      if (report.kind == ReportResult::Kind::kPopped) continue;
      if (report.kind == ReportResult::Kind::kFound) {
        std::vector<VertexId> expanded = Expand(g, report.cluster, *eps_prime);
        cluster = SampleCluster(g, expanded, rng);
        recorder.AddReported(std::move(report.cluster));
        kind = StepKind::kAtom;
      } else {
        cluster = PivotStep(g, rng);
        kind = StepKind::kPivot;
      }
    } else {
      cluster = PivotStep(g, rng);
      kind = StepKind::kPivot;
    }
    const std::vector<BoundaryEvent> events =
        recorder.Remove(std::move(cluster), kind);
    finder->OnClusterRemoved(events);
  }
  return recorder.Finish(&finder->stats());
}

absl::StatusOr<ClusteringRun> RunAtomOnly(Graph& g, const GoodnessParams& gp,
                                          Rng& rng, const RunOptions& options) {
  absl::StatusOr<AtomFinder> finder = AtomFinder::Create(g, gp);
  if (!finder.ok()) return finder.status();
  finder->set_event_log(options.event_log);

  RunRecorder recorder(g, options);
  while (!g.empty() && !finder->queue().empty()) {
    ReportResult report = NextReport(*finder, rng, options);
    if (report.kind != ReportResult::Kind::kFound) continue;
    recorder.AddReported(report.cluster);
    const std::vector<BoundaryEvent> events =
        recorder.Remove(std::move(report.cluster), StepKind::kAtom);
    finder->OnClusterRemoved(events);
  }
  while (!g.empty()) {
    recorder.Remove({g.LiveVertices().front()}, StepKind::kSingleton);
  }
  return recorder.Finish(&finder->stats());
}

ClusteringRun RunPivotBaseline(Graph& g, Rng& rng, const RunOptions& options) {
  RunRecorder recorder(g, options);
  while (!g.empty()) recorder.Remove(PivotStep(g, rng), StepKind::kPivot);
  return recorder.Finish(nullptr);
}

}  // namespace atompivot
