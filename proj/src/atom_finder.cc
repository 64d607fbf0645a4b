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

#include "atompivot/atom_finder.h"

#include <cmath>
#include <random>

#include "atompivot/check_macros.h"

namespace atompivot {
namespace {

// ln(d / (1 + delta)), floored at 1 where the formula would be non-positive,
// infinite or huge.
double ClampedLogDegree(int64_t degree, double delta) {
  return std::max(1.0, std::log(static_cast<double>(degree) / (1 + delta)));
}

}  // namespace

uint64_t InitialCopies(int64_t degree, int64_t n, double delta) {
  AP_CHECK(degree >= 1 && n >= 1, "InitialCopies: degree and n must be >= 1");
  const double copies = 2 * (1 + delta) * std::log(static_cast<double>(n)) /
                        ClampedLogDegree(degree, delta);
  return static_cast<uint64_t>(std::ceil(copies));
}

uint64_t HitCopies(int64_t degree_after, int64_t n, double delta) {
  AP_CHECK(degree_after >= 1 && n >= 1, "HitCopies: degree and n must be >= 1");
  AP_CHECK(delta > 0, "HitCopies: delta must be positive");
  const double copies =
      2 * (1 + delta) * std::log(static_cast<double>(n)) /
      (delta * static_cast<double>(degree_after) *
       ClampedLogDegree(degree_after, delta));
  return static_cast<uint64_t>(std::ceil(copies));
}

void CopyQueue::Push(VertexId v, uint64_t copies) {
  if (copies == 0) return;
  if (!runs_.empty() && runs_.back().vertex == v) {
    runs_.back().copies += copies;
  } else {
    runs_.push_back({v, copies});
  }
  total_ += copies;
}

VertexId CopyQueue::Top() const {
  AP_CHECK(!runs_.empty(), "CopyQueue: empty");
  return runs_.back().vertex;
}

uint64_t CopyQueue::TopRun() const {
  AP_CHECK(!runs_.empty(), "CopyQueue: empty");
  return runs_.back().copies;
}

VertexId CopyQueue::Pop() {
  const VertexId v = Top();
  PopTop(1);
  return v;
}

void CopyQueue::PopTop(uint64_t copies) {
  AP_CHECK(!runs_.empty() && copies <= runs_.back().copies,
           "CopyQueue: popping more copies than available");
  runs_.back().copies -= copies;
  total_ -= copies;
  if (runs_.back().copies == 0) runs_.pop_back();
}

AtomFinder::AtomFinder(const Graph& g, const GoodnessParams& params,
                       const CleanParams& clean_params)
    : graph_(&g),
      params_(params),
      clean_params_(clean_params),
      n_(g.num_vertices()) {
  const auto universe = static_cast<size_t>(g.initial_vertex_count());
  check_memo_.resize(universe);
  clean_memo_.resize(universe);
  touched_stamp_.assign(universe, 0);
}

absl::StatusOr<AtomFinder> AtomFinder::Create(const Graph& g,
                                              const GoodnessParams& params) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  absl::StatusOr<CleanParams> clean = DeriveCleanParams(params);
  if (!clean.ok()) return clean.status();
  AtomFinder finder(g, params, *clean);
  std::vector<VertexId> live(g.LiveVertices().begin(), g.LiveVertices().end());
  std::sort(live.begin(), live.end());
  for (VertexId v : live) {
    const uint64_t copies = InitialCopies(g.Degree(v), finder.n_, params.delta);
    finder.queue_.Push(v, copies);
    finder.stats_.initial_copies += copies;
  }
  finder.stats_.copies_enqueued = finder.stats_.initial_copies;
  return finder;
}

CheckDistribution& AtomFinder::CheckFor(VertexId v) {
  auto& slot = check_memo_[v];
  if (slot == nullptr) {
    slot = std::make_unique<CheckDistribution>(*graph_, v, clean_params_,
                                               params_.gamma);
  }
  return *slot;
}

const std::vector<VertexId>& AtomFinder::CleanFor(VertexId v) {
  auto& slot = clean_memo_[v];
  if (!slot.has_value()) {
    const VertexSet& nbhd = graph_->Neighborhood(v);
    for (VertexId u : nbhd) {
      stats_.probes += static_cast<int64_t>(
          std::min(nbhd.size(), graph_->Neighborhood(u).size()));
    }
    slot = Clean(*graph_, nbhd, clean_params_);
  }
  return *slot;
}

void AtomFinder::Invalidate(VertexId v) {
  check_memo_[v].reset();
  clean_memo_[v].reset();
}

ReportResult AtomFinder::TryReport(Rng& rng) {
  ReportResult result;
  if (queue_.empty()) {
    if (log_ != nullptr) *log_ << "empty\n";
    return result;
  }
  const VertexId v = queue_.Pop();
  result.pops = 1;
  result.kind = ReportResult::Kind::kPopped;
  ++stats_.pops;
  if (!graph_->IsLive(v)) {
    ++stats_.dead_pops;
    if (log_ != nullptr) *log_ << "pop " << v << " dead\n";
    return result;
  }
  CheckDistribution& check = CheckFor(v);
  ++stats_.checks;
  stats_.check_draws += check.budget().draws();
  const int64_t probes_before = check.probes();
  const bool passed = check.Sample(*graph_, rng);
  stats_.probes += check.probes() - probes_before;
  if (!passed) {
    if (log_ != nullptr) *log_ << "pop " << v << " check-false\n";
    return result;
  }
  ++stats_.checks_passed;
  const std::vector<VertexId>& cleaned = CleanFor(v);
  if (cleaned.empty()) {
    if (log_ != nullptr) *log_ << "pop " << v << " clean-empty\n";
    return result;
  }
  ++stats_.reports;
  result.kind = ReportResult::Kind::kFound;
  result.cluster = cleaned;
  if (log_ != nullptr) *log_ << "pop " << v << " found " << cleaned.size() << "\n";
  return result;
}

ReportResult AtomFinder::AdvanceToReport(Rng& rng) {
  ReportResult result;
  while (!queue_.empty()) {
    const VertexId v = queue_.Top();
    const uint64_t run = queue_.TopRun();
    if (!graph_->IsLive(v)) {
      queue_.PopTop(run);
      result.pops += run;
      stats_.pops += run;
      stats_.dead_pops += run;
      continue;
    }
    CheckDistribution& check = CheckFor(v);
    const int64_t probes_before = check.probes();
    const double accept = check.ResolveZeroOrExact(*graph_);
    stats_.probes += check.probes() - probes_before;
    const double draws = check.budget().draws();

    // Number of failed pops before the first success in this run.
    uint64_t failures = run;
    const std::vector<VertexId>* cleaned = nullptr;
    if (accept > 0) {
      cleaned = &CleanFor(v);
      if (cleaned->empty()) {
        // Passing checks are followed by an unsuccessful clean.
        std::binomial_distribution<uint64_t> passes(run, std::min(accept, 1.0));
        stats_.checks_passed += passes(rng);
      } else if (accept >= 1) {
        failures = 0;
      } else {
        const double u = 1 - Uniform01(rng);  // (0, 1]
        const double g = std::floor(std::log(u) / std::log1p(-accept));
        if (g < static_cast<double>(run)) failures = static_cast<uint64_t>(g);
      }
    }
    if (failures >= run) {
      queue_.PopTop(run);
      result.pops += run;
      stats_.pops += run;
      stats_.checks += run;
      stats_.check_draws += draws * static_cast<double>(run);
      if (log_ != nullptr) *log_ << "skip " << v << " x" << run << "\n";
      continue;
    }
    queue_.PopTop(failures + 1);
    result.pops += failures + 1;
    stats_.pops += failures + 1;
    stats_.checks += failures + 1;
    stats_.checks_passed += 1;
    stats_.check_draws += draws * static_cast<double>(failures + 1);
    ++stats_.reports;
    result.kind = ReportResult::Kind::kFound;
    result.cluster = *cleaned;
    if (log_ != nullptr) {
      *log_ << "found " << v << " size " << cleaned->size() << " after "
            << failures + 1 << " pops\n";
    }
    return result;
  }
  result.kind = ReportResult::Kind::kQueueEmpty;
  if (log_ != nullptr) *log_ << "empty\n";
  return result;
}

void AtomFinder::OnClusterRemoved(std::span<const BoundaryEvent> events) {
  ++stamp_;
  if (stamp_ == 0) {
    std::fill(touched_stamp_.begin(), touched_stamp_.end(), 0);
    stamp_ = 1;
  }
  for (const BoundaryEvent& e : events) {
    const uint64_t copies = HitCopies(e.degree_after, n_, params_.delta);
    queue_.Push(e.vertex, copies);
    stats_.copies_enqueued += copies;
    if (touched_stamp_[e.vertex] == stamp_) continue;
    touched_stamp_[e.vertex] = stamp_;
    // N(e.vertex) changed: every memo that reads it is stale.
    Invalidate(e.vertex);
    for (VertexId x : graph_->Neighborhood(e.vertex)) Invalidate(x);
  }
}

}  // namespace atompivot
