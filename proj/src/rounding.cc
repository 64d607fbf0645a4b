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

#include "atompivot/rounding.h"

#include <algorithm>
#include <set>

#include "absl/container/flat_hash_map.h"
#include "atompivot/check_macros.h"

namespace atompivot {
namespace {

// Outside vertices adjacent to the cluster with their inside-neighbor counts,
// in order of discovery.
struct Candidates {
  absl::flat_hash_map<VertexId, int64_t> inside;
  std::vector<VertexId> order;
  int64_t scanned = 0;
};

Candidates CollectCandidates(const Graph& g, std::span<const VertexId> cluster,
                             const VertexSet& members) {
  Candidates c;
  for (VertexId u : cluster) {
    AP_CHECK(g.IsLive(u), "rounding: dead vertex in cluster");
    for (VertexId v : g.Neighborhood(u)) {
      ++c.scanned;
      if (members.contains(v)) continue;
      auto [it, inserted] = c.inside.try_emplace(v, 0);
      if (inserted) c.order.push_back(v);
      ++it->second;
    }
  }
  std::sort(c.order.begin(), c.order.end());
  return c;
}

VertexAffinity MakeAffinity(const Graph& g, VertexId v, int64_t inside,
                            int64_t cluster_size) {
  return {inside, g.Degree(v) - inside, cluster_size};
}

}  // namespace

VertexAffinity Affinity(const Graph& g, const VertexSet& cluster, VertexId v) {
  AP_CHECK(!cluster.empty(), "Affinity: empty cluster");
  AP_CHECK(g.IsLive(v), "Affinity: dead vertex");
  AP_CHECK(!cluster.contains(v), "Affinity: vertex inside the cluster");
  return MakeAffinity(g, v, IntersectionSize(g, v, cluster),
                      static_cast<int64_t>(cluster.size()));
}

std::vector<VertexId> Expand(const Graph& g, std::span<const VertexId> cluster,
                             double eps_prime) {
  AP_CHECK(!cluster.empty(), "Expand: empty cluster");
  AP_CHECK(eps_prime < 1.0 / 6.0, "Expand: eps' must be < 1/6");
  std::vector<VertexId> expanded(cluster.begin(), cluster.end());
  VertexSet members(cluster.begin(), cluster.end());
  AP_CHECK(members.size() == cluster.size(), "Expand: duplicate vertex");
  Candidates cand = CollectCandidates(g, cluster, members);

  // Smallest id first, so the result does not depend on hash-set order.
  std::set<VertexId> pending(cand.order.begin(), cand.order.end());
  while (true) {
    while (!pending.empty()) {
      const VertexId v = *pending.begin();
      pending.erase(pending.begin());
      auto it = cand.inside.find(v);
      if (it == cand.inside.end()) continue;  // absorbed meanwhile
      const VertexAffinity a = MakeAffinity(
          g, v, it->second, static_cast<int64_t>(members.size()));
      if (!(a.ExpansionMargin(eps_prime) > kExpansionTolerance)) continue;
      cand.inside.erase(it);
      members.insert(v);
      expanded.push_back(v);
      for (VertexId w : g.Neighborhood(v)) {
        if (members.contains(w)) continue;
        ++cand.inside[w];
        pending.insert(w);
      }
    }
    // Candidates not adjacent to a new member cannot start to qualify, so
    // this pass should find nothing; it re-verifies the closure anyway.
    for (const auto& [v, inside] : cand.inside) {
      const VertexAffinity a =
          MakeAffinity(g, v, inside, static_cast<int64_t>(members.size()));
      if (a.ExpansionMargin(eps_prime) > kExpansionTolerance) pending.insert(v);
    }
    if (pending.empty()) break;
  }
  return expanded;
}

bool IsExpansionClosed(const Graph& g, std::span<const VertexId> cluster,
                       double eps_prime) {
  const VertexSet members(cluster.begin(), cluster.end());
  const Candidates cand = CollectCandidates(g, cluster, members);
  for (VertexId v : cand.order) {
    const VertexAffinity a = MakeAffinity(
        g, v, cand.inside.at(v), static_cast<int64_t>(members.size()));
    if (a.ExpansionMargin(eps_prime) > kExpansionTolerance) return false;
  }
  return true;
}

std::vector<VertexId> SampleCluster(const Graph& g,
                                    std::span<const VertexId> expanded,
                                    Rng& rng, int64_t* work) {
  AP_CHECK(!expanded.empty(), "SampleCluster: empty cluster");
  const VertexSet members(expanded.begin(), expanded.end());
  AP_CHECK(members.size() == expanded.size(), "SampleCluster: duplicate vertex");
  const Candidates cand = CollectCandidates(g, expanded, members);
  std::vector<VertexId> out(expanded.begin(), expanded.end());
  const auto size = static_cast<int64_t>(members.size());
  for (VertexId v : cand.order) {
    const VertexAffinity a = MakeAffinity(g, v, cand.inside.at(v), size);
    if (Uniform01(rng) < a.inclusion_probability()) out.push_back(v);
  }
  if (work != nullptr) *work = cand.scanned;
  return out;
}

}  // namespace atompivot
