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

#ifndef ATOMPIVOT_GOODNESS_H_
#define ATOMPIVOT_GOODNESS_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "atompivot/graph.h"

namespace atompivot {

// Target goodness `eps` of the clusters to be located, plus the slack
// parameters `delta` (degree window) and `gamma` (sampling tolerance).
struct GoodnessParams {
  double eps = 0.0287;
  double delta = 0.0287 / 100;
  double gamma = 0.0287 / 100;

  // eps = 0.0287 with delta = gamma = eps / 100.
  static GoodnessParams Default() { return {}; }
  static GoodnessParams WithEps(double eps) { return {eps, eps / 100, eps / 100}; }

  // Requires eps, delta, gamma > 0, eps < 1, gamma < 1/2 and derived
  // alpha, beta < 1.
  absl::Status Validate() const;
};

// Thresholds of the Clean filter: members may differ from the candidate set
// in at most alpha*|C| vertices, and at most beta*|C| members may fail.
struct CleanParams {
  double alpha = 0;
  double beta = 0;
};

// u in C is kept iff |N(u) xor C| <= alpha*|C|.
//   alpha = (2e + 2d) / ((1 - e)(1 - 2g))
//   beta  = (2e/(1 - e) + d) / ((1 + d)(1 - 2g))
// Accepts delta = gamma = 0. Fails when the formulas are undefined or give
// alpha >= 1 or beta >= 1.
absl::StatusOr<CleanParams> DeriveCleanParams(const GoodnessParams& gp);

// Reported clusters are eps'-good for
//   eps' = (4e + 3d + 2d^2 + e d) / (1 - 3e - 2g(1 - e)(1 + d)).
absl::StatusOr<double> ReportedGoodnessBound(const GoodnessParams& gp);

// Per-step ratio of rounding an eps'-good cluster:
//   2 + 7 eps'(1 + 2 eps') / (2 (1 - 2 eps')^2),   eps' < 1/2.
absl::StatusOr<double> RoundingRatioBound(double eps_prime);

// Per-step ratio of a pivot step when no eps^2-good-on-average cluster
// exists: 3 - eps^2 / (5/6 eps^2 + 1).
absl::StatusOr<double> PivotRatioBound(double eps);

// A nonempty Clean output is (alpha + beta) / (1 - beta)-good.
absl::StatusOr<double> CleanGoodnessBound(const CleanParams& p);

// Every u in C has |N(u) xor C| <= eps*|C|.
bool IsGood(const Graph& g, std::span<const VertexId> cluster, double eps);
// sum over u in C of |N(u) xor C| <= eps*|C|^2.
bool IsGoodOnAverage(const Graph& g, std::span<const VertexId> cluster,
                     double eps);

// Largest |N(u) xor C| / |C| over u in C; the least eps for which C is
// eps-good.
double Goodness(const Graph& g, std::span<const VertexId> cluster);

// K = {u in C : |N(u) xor C| <= alpha*|C|}; returns K if |K| >= (1-beta)|C|
// and the empty set otherwise. K keeps the order of `cluster`; the set
// overload returns it in increasing id order.
std::vector<VertexId> Clean(const Graph& g, std::span<const VertexId> cluster,
                            const CleanParams& p);
std::vector<VertexId> Clean(const Graph& g, const VertexSet& cluster,
                            const CleanParams& p);

// Clean(N(v)) is nonempty.
bool VertexIsGood(const Graph& g, VertexId v, const CleanParams& p);

}  // namespace atompivot

#endif  // ATOMPIVOT_GOODNESS_H_
