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

#include "atompivot/oracle.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "atompivot/check_macros.h"

namespace atompivot {
namespace {

// Live vertices relabelled 0..k-1 with bitmask open neighborhoods.
struct LocalGraph {
  std::vector<VertexId> ids;
  std::vector<uint32_t> adj;
};

LocalGraph Localize(const Graph& g) {
  LocalGraph local;
  local.ids.assign(g.LiveVertices().begin(), g.LiveVertices().end());
  std::sort(local.ids.begin(), local.ids.end());
  const size_t k = local.ids.size();
  local.adj.assign(k, 0);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (i != j && g.Adjacent(local.ids[i], local.ids[j])) {
        local.adj[i] |= 1u << j;
      }
    }
  }
  return local;
}

class PartitionSearch {
 public:
  explicit PartitionSearch(const LocalGraph& local)
      : adj_(local.adj), n_(static_cast<int>(local.adj.size())) {
    label_.assign(n_, 0);
    best_label_.assign(n_, 0);
    masks_.assign(n_ + 1, 0);
    // Singletons: cost = number of edges.
    int64_t edges = 0;
    for (uint32_t a : adj_) edges += std::popcount(a);
    best_cost_ = edges / 2;
    for (int i = 0; i < n_; ++i) best_label_[i] = i;
  }

  void Run() {
    if (n_ > 0) Recurse(0, 0, 0);
  }
  int64_t best_cost() const { return best_cost_; }
  const std::vector<int>& best_label() const { return best_label_; }

 private:
  void Recurse(int i, int num_clusters, int64_t cost) {
    if (cost >= best_cost_) return;
    if (i == n_) {
      best_cost_ = cost;
      best_label_ = label_;
      return;
    }
    const uint32_t prior = (1u << i) - 1;
    const uint32_t nbrs = adj_[i] & prior;
    for (int c = 0; c <= num_clusters; ++c) {
      const uint32_t members = masks_[c];
      const int64_t added = std::popcount(members & ~nbrs) +
                            std::popcount(nbrs & ~members);
      label_[i] = c;
      masks_[c] |= 1u << i;
      Recurse(i + 1, c == num_clusters ? num_clusters + 1 : num_clusters,
              cost + added);
      masks_[c] &= ~(1u << i);
    }
  }

  const std::vector<uint32_t>& adj_;
  int n_;
  std::vector<int> label_;
  std::vector<int> best_label_;
  std::vector<uint32_t> masks_;
  int64_t best_cost_;
};

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  AP_CHECK(den > 0 && num >= 0, "Rational: expects num >= 0, den > 0");
  const int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::ToString() const {
  return den_ == 1 ? absl::StrFormat("%d", num_)
                   : absl::StrFormat("%d/%d", num_, den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

absl::StatusOr<OptResult> ExactOpt(const Graph& g) {
  if (g.num_vertices() > kMaxExactOptVertices) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "ExactOpt supports at most %d vertices, got %d", kMaxExactOptVertices,
        g.num_vertices()));
  }
  const LocalGraph local = Localize(g);
  PartitionSearch search(local);
  search.Run();
  std::vector<int64_t> assignment(g.initial_vertex_count(), -1);
  for (size_t i = 0; i < local.ids.size(); ++i) {
    assignment[local.ids[i]] = search.best_label()[i];
  }
  return OptResult{Clustering::FromAssignment(assignment), search.best_cost()};
}

absl::StatusOr<Rational> ExactPivotExpectation(const Graph& g) {
  if (g.num_vertices() > kMaxPivotExpectationVertices) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "ExactPivotExpectation supports at most %d vertices, got %d",
        kMaxPivotExpectationVertices, g.num_vertices()));
  }
  const LocalGraph local = Localize(g);
  const int n = static_cast<int>(local.ids.size());
  std::vector<int64_t> factorial(n + 1, 1);
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  // scaled[S] = E[S] * |S|!, an integer since every pivot sequence on S has
  // probability a multiple of 1/|S|!.
  const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int64_t> scaled(size_t{1} << n, 0);
  for (uint32_t s = 1; s <= full && s != 0; ++s) {
    const int size = std::popcount(s);
    int64_t total = 0;
    for (uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const uint32_t cluster = (local.adj[v] | (1u << v)) & s;
      const uint32_t remainder = s & ~cluster;
      const int csize = std::popcount(cluster);
      int64_t internal_edges_twice = 0;
      int64_t leaving = 0;
      for (uint32_t c = cluster; c != 0; c &= c - 1) {
        const int u = std::countr_zero(c);
        internal_edges_twice += std::popcount(local.adj[u] & cluster);
        leaving += std::popcount(local.adj[u] & remainder);
      }
      const int64_t step = int64_t{csize} * (csize - 1) / 2 -
                           internal_edges_twice / 2 + leaving;
      total += step * factorial[size - 1] +
               scaled[remainder] *
                   (factorial[size - 1] / factorial[std::popcount(remainder)]);
    }
    scaled[s] = total;
  }
  return Rational(scaled[full], factorial[n]);
}

}  // namespace atompivot
