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

#ifndef ATOMPIVOT_ROUNDING_H_
#define ATOMPIVOT_ROUNDING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "atompivot/graph.h"
#include "atompivot/random.h"

namespace atompivot {

// Tolerance on the expansion margin (2 beta_v - 1 - alpha_v - 2 eps'), which
// mixes exact counts with a floating-point eps'.
inline constexpr double kExpansionTolerance = 1e-12;

// How a vertex v outside a cluster K relates to it, as exact counts:
// `inside` = |N(v) & K|, `outside` = |N(v) \ K| (>= 1, since v is in N(v)).
struct VertexAffinity {
  int64_t inside = 0;
  int64_t outside = 0;
  int64_t cluster_size = 0;

  double alpha() const {
    return static_cast<double>(outside) / static_cast<double>(cluster_size);
  }
  double beta() const {
    return static_cast<double>(inside) / static_cast<double>(cluster_size);
  }
  // beta / (1 + alpha) = inside / (|K| + outside).
  double inclusion_probability() const {
    return static_cast<double>(inside) /
           static_cast<double>(cluster_size + outside);
  }
  // 2 beta - (1 + alpha + 2 eps'); positive means v must join K.
  double ExpansionMargin(double eps_prime) const {
    return static_cast<double>(2 * inside - outside - cluster_size) /
               static_cast<double>(cluster_size) -
           2 * eps_prime;
  }
};

// Requires K nonempty and v live and outside K.
VertexAffinity Affinity(const Graph& g, const VertexSet& cluster, VertexId v);

// Grows K by absorbing, one at a time, any vertex with
// beta_v > 1 - beta_v + alpha_v + 2 eps' (affinities against the current K),
// until no outside vertex qualifies. Returns K followed by the absorbed
// vertices in absorption order. Requires eps' < 1/6.
std::vector<VertexId> Expand(const Graph& g, std::span<const VertexId> cluster,
                             double eps_prime);

// True iff no vertex outside `cluster` satisfies the absorption rule.
bool IsExpansionClosed(const Graph& g, std::span<const VertexId> cluster,
                       double eps_prime);

// C = K plus each vertex v outside K with a neighbor in K, independently with
// probability inside / (|K| + outside). Only neighbors of K are visited; if
// `work` is given it receives the number of adjacency entries scanned.
std::vector<VertexId> SampleCluster(const Graph& g,
                                    std::span<const VertexId> expanded,
                                    Rng& rng, int64_t* work = nullptr);

}  // namespace atompivot

#endif  // ATOMPIVOT_ROUNDING_H_
