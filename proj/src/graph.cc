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

#include "atompivot/graph.h"

#include <algorithm>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "atompivot/check_macros.h"

namespace atompivot {

absl::StatusOr<Graph> Graph::FromEdges(int64_t n, std::span<const Edge> edges) {
  if (n < 0 || n >= static_cast<int64_t>(UINT32_MAX)) {
    return absl::InvalidArgumentError(absl::StrFormat("bad vertex count %d", n));
  }
  Graph g;
  g.adjacency_.resize(n);
  g.live_.resize(n);
  g.live_position_.resize(n);
  g.scratch_mark_.assign(n, 0);
  for (int64_t v = 0; v < n; ++v) {
    g.adjacency_[v].insert(static_cast<VertexId>(v));
    g.live_[v] = static_cast<VertexId>(v);
    g.live_position_[v] = static_cast<uint32_t>(v);
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      return absl::InvalidArgumentError(
          absl::StrFormat("edge (%d, %d) out of range for n=%d", u, v, n));
    }
    if (u == v) {
      return absl::InvalidArgumentError(absl::StrFormat("self-loop at %d", u));
    }
    if (g.adjacency_[u].insert(v).second) {
      g.adjacency_[v].insert(u);
      ++g.num_edges_;
    }
  }
  g.initial_vertex_count_ = n;
  g.initial_edge_count_ = g.num_edges_;
  return g;
}

bool Graph::Adjacent(VertexId u, VertexId v) const {
  const VertexSet& nu = adjacency_[u];
  const VertexSet& nv = adjacency_[v];
  return nu.size() <= nv.size() ? nu.contains(v) : nv.contains(u);
}

std::vector<BoundaryEvent> Graph::RemoveCluster(
    std::span<const VertexId> cluster) {
  for (VertexId u : cluster) {
    AP_CHECK(IsLive(u), "RemoveCluster: vertex not live");
    AP_CHECK(scratch_mark_[u] == 0, "RemoveCluster: duplicate vertex");
    scratch_mark_[u] = 1;
  }
  std::vector<BoundaryEvent> events;
  std::vector<VertexId> outside;
  for (VertexId u : cluster) {
    outside.clear();
    for (VertexId v : adjacency_[u]) {
      if (v == u) continue;
      // Internal edges are deleted when their first endpoint goes.
      if (scratch_mark_[v] != 1) outside.push_back(v);
      adjacency_[v].erase(u);
      --num_edges_;
    }
    // Events go out in id order so that runs do not depend on hash layout.
    std::sort(outside.begin(), outside.end());
    for (VertexId v : outside) {
      events.push_back({v, static_cast<int64_t>(adjacency_[v].size())});
    }
    VertexSet().swap(adjacency_[u]);
    const uint32_t pos = live_position_[u];
    const VertexId last = live_.back();
    live_[pos] = last;
    live_position_[last] = pos;
    live_.pop_back();
    live_position_[u] = kDead;
  }
  for (VertexId u : cluster) scratch_mark_[u] = 0;
  return events;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId u : live_) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t SymmetricDifferenceSize(const Graph& g, VertexId a, VertexId b) {
  AP_CHECK(g.IsLive(a) && g.IsLive(b), "SymmetricDifferenceSize: dead vertex");
  const VertexSet& na = g.Neighborhood(a);
  const VertexSet& nb = g.Neighborhood(b);
  const VertexSet& small = na.size() <= nb.size() ? na : nb;
  const VertexSet& large = na.size() <= nb.size() ? nb : na;
  int64_t common = 0;
  for (VertexId w : small) common += large.contains(w);
  return static_cast<int64_t>(na.size() + nb.size()) - 2 * common;
}

int64_t IntersectionSize(const Graph& g, VertexId v, const VertexSet& cluster) {
  const VertexSet& nv = g.Neighborhood(v);
  int64_t common = 0;
  if (nv.size() <= cluster.size()) {
    for (VertexId w : nv) common += cluster.contains(w);
  } else {
    for (VertexId w : cluster) common += nv.contains(w);
  }
  return common;
}

int64_t ClusterSymmetricDifference(const Graph& g, VertexId v,
                                   const VertexSet& cluster) {
  AP_CHECK(g.IsLive(v), "ClusterSymmetricDifference: dead vertex");
  for (VertexId w : cluster) {
    AP_CHECK(g.IsLive(w), "ClusterSymmetricDifference: dead vertex in cluster");
  }
  return g.Degree(v) + static_cast<int64_t>(cluster.size()) -
         2 * IntersectionSize(g, v, cluster);
}

absl::StatusOr<Clustering> Clustering::FromClusters(
    int64_t universe_size, std::vector<std::vector<VertexId>> clusters) {
  Clustering c(universe_size);
  for (auto& members : clusters) {
    if (members.empty()) return absl::InvalidArgumentError("empty cluster");
    for (VertexId v : members) {
      if (v >= universe_size) {
        return absl::InvalidArgumentError(
            absl::StrFormat("vertex %d outside universe %d", v, universe_size));
      }
      if (c.assignment_[v] != -1) {
        return absl::InvalidArgumentError(
            absl::StrFormat("vertex %d in two clusters", v));
      }
      c.assignment_[v] = static_cast<int64_t>(c.clusters_.size());
    }
    c.num_covered_ += static_cast<int64_t>(members.size());
    c.clusters_.push_back(std::move(members));
  }
  return c;
}

Clustering Clustering::FromAssignment(std::span<const int64_t> assignment) {
  Clustering c(static_cast<int64_t>(assignment.size()));
  absl::flat_hash_map<int64_t, int64_t> renumber;
  for (size_t v = 0; v < assignment.size(); ++v) {
    const int64_t label = assignment[v];
    if (label < 0) continue;
    auto [it, inserted] =
        renumber.try_emplace(label, static_cast<int64_t>(c.clusters_.size()));
    if (inserted) c.clusters_.emplace_back();
    const int64_t index = it->second;
    c.assignment_[v] = index;
    c.clusters_[index].push_back(static_cast<VertexId>(v));
    ++c.num_covered_;
  }
  return c;
}

void Clustering::AddCluster(std::vector<VertexId> members) {
  AP_CHECK(!members.empty(), "AddCluster: empty cluster");
  const auto index = static_cast<int64_t>(clusters_.size());
  for (VertexId v : members) {
    AP_CHECK(v < assignment_.size(), "AddCluster: vertex outside universe");
    AP_CHECK(assignment_[v] == -1, "AddCluster: vertex already covered");
    assignment_[v] = index;
  }
  num_covered_ += static_cast<int64_t>(members.size());
  clusters_.push_back(std::move(members));
}

std::vector<std::vector<VertexId>> Clustering::Canonical() const {
  std::vector<std::vector<VertexId>> out = clusters_;
  for (auto& members : out) std::sort(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

absl::StatusOr<int64_t> ClusteringCost(const Graph& g, const Clustering& c) {
  std::vector<int64_t> live_per_cluster(c.num_clusters(), 0);
  for (VertexId v : g.LiveVertices()) {
    const int64_t id = c.ClusterOf(v);
    if (id < 0) {
      return absl::InvalidArgumentError(
          absl::StrFormat("live vertex %d has no cluster", v));
    }
    ++live_per_cluster[id];
  }
  int64_t internal_edges = 0;
  for (VertexId u : g.LiveVertices()) {
    const int64_t id = c.ClusterOf(u);
    for (VertexId v : g.Neighborhood(u)) {
      if (u < v && c.ClusterOf(v) == id) ++internal_edges;
    }
  }
  int64_t internal_pairs = 0;
  for (int64_t s : live_per_cluster) internal_pairs += s * (s - 1) / 2;
  return (internal_pairs - internal_edges) + (g.num_edges() - internal_edges);
}

StepAccounting StepCost(const Graph& g, std::span<const VertexId> cluster) {
  AP_CHECK(!cluster.empty(), "StepCost: empty cluster");
  VertexSet members(cluster.begin(), cluster.end());
  AP_CHECK(members.size() == cluster.size(), "StepCost: duplicate vertex");
  int64_t internal_edges_twice = 0;
  int64_t degree_sum = 0;
  for (VertexId u : cluster) {
    AP_CHECK(g.IsLive(u), "StepCost: dead vertex");
    degree_sum += g.Degree(u) - 1;
    internal_edges_twice += IntersectionSize(g, u, members) - 1;
  }
  const auto size = static_cast<int64_t>(cluster.size());
  const int64_t internal_edges = internal_edges_twice / 2;
  StepAccounting out;
  out.alg_cost = (size * (size - 1) / 2 - internal_edges) +
                 (degree_sum - internal_edges_twice);
  out.removed_cluster.assign(cluster.begin(), cluster.end());
  return out;
}

}  // namespace atompivot
