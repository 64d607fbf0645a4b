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

#ifndef ATOMPIVOT_GRAPH_H_
#define ATOMPIVOT_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "absl/status/statusor.h"

namespace atompivot {

// Dense vertex index. Ids are never reused after deletion.
using VertexId = uint32_t;
using VertexSet = absl::flat_hash_set<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

// Emitted by Graph::RemoveCluster for every deleted edge with exactly one
// endpoint in the removed cluster. `degree_after` is the closed degree of
// `vertex` right after that single edge was deleted.
struct BoundaryEvent {
  VertexId vertex;
  int64_t degree_after;

  friend bool operator==(const BoundaryEvent&, const BoundaryEvent&) = default;
};

// Mutable undirected simple graph over closed neighborhoods: every live vertex
// belongs to its own neighborhood, so Degree(v) = |N(v)| >= 1. Edges are only
// ever removed, never added. Single writer; concurrent readers are fine
// between mutations.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on vertices [0, n). Duplicate pairs (in either
  // orientation) are ignored. Fails on self-loops and out-of-range ids.
  static absl::StatusOr<Graph> FromEdges(int64_t n, std::span<const Edge> edges);

  int64_t initial_vertex_count() const { return initial_vertex_count_; }
  int64_t initial_edge_count() const { return initial_edge_count_; }
  int64_t num_vertices() const { return static_cast<int64_t>(live_.size()); }
  // Number of live edges, not counting the implicit self-pairs.
  int64_t num_edges() const { return num_edges_; }
  bool empty() const { return live_.empty(); }

  bool IsLive(VertexId v) const {
    return v < live_position_.size() && live_position_[v] != kDead;
  }
  // Closed neighborhood N(v). Requires v live.
  const VertexSet& Neighborhood(VertexId v) const { return adjacency_[v]; }
  int64_t Degree(VertexId v) const {
    return static_cast<int64_t>(adjacency_[v].size());
  }
  bool Adjacent(VertexId u, VertexId v) const;

  // Live vertices in an order that changes only on removal.
  std::span<const VertexId> LiveVertices() const { return live_; }

  // Deletes every vertex of `cluster` with its incident edges. Vertices are
  // processed in the given order and, for each, its edges in adjacency order;
  // one event is returned per deleted boundary edge. Requires `cluster` to be
  // a set of distinct live vertices.
  std::vector<BoundaryEvent> RemoveCluster(std::span<const VertexId> cluster);

  // Live edges as (u, v) with u < v, sorted.
  std::vector<Edge> Edges() const;

 private:
  static constexpr uint32_t kDead = UINT32_MAX;

  std::vector<VertexSet> adjacency_;
  std::vector<VertexId> live_;
  std::vector<uint32_t> live_position_;
  std::vector<uint8_t> scratch_mark_;
  int64_t initial_vertex_count_ = 0;
  int64_t initial_edge_count_ = 0;
  int64_t num_edges_ = 0;
};

// |N(a) xor N(b)| = d(a) + d(b) - 2|N(a) & N(b)|. Requires a, b live.
int64_t SymmetricDifferenceSize(const Graph& g, VertexId a, VertexId b);

// |N(v) & cluster|, iterating the smaller of the two sets.
int64_t IntersectionSize(const Graph& g, VertexId v, const VertexSet& cluster);

// |N(v) xor cluster|. Requires v and every member of `cluster` live.
int64_t ClusterSymmetricDifference(const Graph& g, VertexId v,
                                   const VertexSet& cluster);

// A partition of a vertex universe [0, universe_size) restricted to the
// vertices it was built over.
class Clustering {
 public:
  explicit Clustering(int64_t universe_size = 0)
      : assignment_(universe_size, -1) {}

  // Fails if clusters overlap, contain out-of-range ids or are empty.
  static absl::StatusOr<Clustering> FromClusters(
      int64_t universe_size, std::vector<std::vector<VertexId>> clusters);
  // assignment[v] = cluster id, or -1 if v is not covered. Cluster ids need
  // not be contiguous; they are renumbered in order of first appearance.
  static Clustering FromAssignment(std::span<const int64_t> assignment);

  // Appends a cluster. Requires its members uncovered so far.
  void AddCluster(std::vector<VertexId> members);

  int64_t universe_size() const {
    return static_cast<int64_t>(assignment_.size());
  }
  int64_t num_clusters() const { return static_cast<int64_t>(clusters_.size()); }
  const std::vector<std::vector<VertexId>>& clusters() const { return clusters_; }
  // Cluster index of v, or -1 when v is not covered.
  int64_t ClusterOf(VertexId v) const {
    return v < assignment_.size() ? assignment_[v] : -1;
  }
  int64_t num_covered() const { return num_covered_; }

  // Members sorted, clusters sorted by smallest member. Two clusterings are
  // the same partition iff their canonical forms compare equal.
  std::vector<std::vector<VertexId>> Canonical() const;

 private:
  std::vector<int64_t> assignment_;
  std::vector<std::vector<VertexId>> clusters_;
  int64_t num_covered_ = 0;
};

// Number of disagreements of `c` on the live part of `g`: edges between
// clusters plus non-adjacent pairs inside a cluster. Fails if some live vertex
// is not covered by `c`.
absl::StatusOr<int64_t> ClusteringCost(const Graph& g, const Clustering& c);

// Disagreements charged when `cluster` is removed from the current graph.
struct StepAccounting {
  int64_t alg_cost = 0;
  std::vector<VertexId> removed_cluster;
};

// Internal non-adjacent pairs of `cluster` plus edges leaving it, measured in
// the current graph. Requires a nonempty set of distinct live vertices.
StepAccounting StepCost(const Graph& g, std::span<const VertexId> cluster);

}  // namespace atompivot

#endif  // ATOMPIVOT_GRAPH_H_
