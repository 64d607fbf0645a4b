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

#include "atompivot/goodness.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "atompivot/check_macros.h"

namespace atompivot {
namespace {

VertexSet ToSet(std::span<const VertexId> cluster) {
  VertexSet set(cluster.begin(), cluster.end());
  AP_CHECK(set.size() == cluster.size(), "duplicate vertex in cluster");
  return set;
}

// Clean on a vertex sequence with its membership set.
std::vector<VertexId> CleanImpl(const Graph& g, std::span<const VertexId> order,
                                const VertexSet& members, const CleanParams& p) {
  AP_CHECK(!members.empty(), "Clean: empty cluster");
  const double size = static_cast<double>(members.size());
  const double threshold = p.alpha * size;
  std::vector<VertexId> kept;
  for (VertexId u : order) {
    AP_CHECK(g.IsLive(u), "Clean: dead vertex");
    const int64_t diff = g.Degree(u) + static_cast<int64_t>(members.size()) -
                         2 * IntersectionSize(g, u, members);
    if (static_cast<double>(diff) <= threshold) kept.push_back(u);
  }
  if (static_cast<double>(kept.size()) < (1 - p.beta) * size) kept.clear();
  return kept;
}

}  // namespace

absl::Status GoodnessParams::Validate() const {
  if (!(eps > 0 && eps < 1)) {
    return absl::InvalidArgumentError(absl::StrFormat("eps=%g not in (0,1)", eps));
  }
  if (!(delta > 0)) {
    return absl::InvalidArgumentError(absl::StrFormat("delta=%g not > 0", delta));
  }
  if (!(gamma > 0 && gamma < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma=%g not in (0,1/2)", gamma));
  }
  return DeriveCleanParams(*this).status();
}

absl::StatusOr<CleanParams> DeriveCleanParams(const GoodnessParams& gp) {
  const double e = gp.eps, d = gp.delta, g = gp.gamma;
  if (!(e >= 0 && e < 1) || !(d >= 0) || !(g >= 0 && g < 0.5)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "clean parameters undefined for eps=%g delta=%g gamma=%g", e, d, g));
  }
  CleanParams p;
  p.alpha = (2 * e + 2 * d) / ((1 - e) * (1 - 2 * g));
  p.beta = (2 * e / (1 - e) + d) / ((1 + d) * (1 - 2 * g));
  if (p.alpha >= 1 || p.beta >= 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "derived alpha=%g beta=%g must both be < 1", p.alpha, p.beta));
  }
  return p;
}

absl::StatusOr<double> ReportedGoodnessBound(const GoodnessParams& gp) {
  const double e = gp.eps, d = gp.delta, g = gp.gamma;
  const double denominator = 1 - 3 * e - 2 * g * (1 - e) * (1 + d);
  if (!(denominator > 0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("goodness bound undefined: denominator %g", denominator));
  }
  return (4 * e + 3 * d + 2 * d * d + e * d) / denominator;
}

absl::StatusOr<double> RoundingRatioBound(double eps_prime) {
  if (!(eps_prime >= 0 && eps_prime < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps'=%g not in [0, 1/2)", eps_prime));
  }
  const double s = 1 - 2 * eps_prime;
  return 2 + 7 * eps_prime * (1 + 2 * eps_prime) / (2 * s * s);
}

absl::StatusOr<double> PivotRatioBound(double eps) {
  if (!(eps >= 0)) {
    return absl::InvalidArgumentError(absl::StrFormat("eps=%g < 0", eps));
  }
  const double e2 = eps * eps;
  return 3 - e2 / (5.0 / 6.0 * e2 + 1);
}

absl::StatusOr<double> CleanGoodnessBound(const CleanParams& p) {
  if (!(p.beta < 1)) {
    return absl::InvalidArgumentError(absl::StrFormat("beta=%g >= 1", p.beta));
  }
  return (p.alpha + p.beta) / (1 - p.beta);
}

bool IsGood(const Graph& g, std::span<const VertexId> cluster, double eps) {
  AP_CHECK(!cluster.empty(), "IsGood: empty cluster");
  const VertexSet members = ToSet(cluster);
  const double threshold = eps * static_cast<double>(members.size());
  for (VertexId u : cluster) {
    if (static_cast<double>(ClusterSymmetricDifference(g, u, members)) >
        threshold) {
      return false;
    }
  }
  return true;
}

bool IsGoodOnAverage(const Graph& g, std::span<const VertexId> cluster,
                     double eps) {
  AP_CHECK(!cluster.empty(), "IsGoodOnAverage: empty cluster");
  const VertexSet members = ToSet(cluster);
  int64_t total = 0;
  for (VertexId u : cluster) total += ClusterSymmetricDifference(g, u, members);
  const double size = static_cast<double>(members.size());
  return static_cast<double>(total) <= eps * size * size;
}

double Goodness(const Graph& g, std::span<const VertexId> cluster) {
  AP_CHECK(!cluster.empty(), "Goodness: empty cluster");
  const VertexSet members = ToSet(cluster);
  int64_t worst = 0;
  for (VertexId u : cluster) {
    worst = std::max(worst, ClusterSymmetricDifference(g, u, members));
  }
  return static_cast<double>(worst) / static_cast<double>(members.size());
}

std::vector<VertexId> Clean(const Graph& g, std::span<const VertexId> cluster,
                            const CleanParams& p) {
  return CleanImpl(g, cluster, ToSet(cluster), p);
}

std::vector<VertexId> Clean(const Graph& g, const VertexSet& cluster,
                            const CleanParams& p) {
  std::vector<VertexId> order(cluster.begin(), cluster.end());
  std::sort(order.begin(), order.end());
  return CleanImpl(g, order, cluster, p);
}

bool VertexIsGood(const Graph& g, VertexId v, const CleanParams& p) {
  AP_CHECK(g.IsLive(v), "VertexIsGood: dead vertex");
  return !Clean(g, g.Neighborhood(v), p).empty();
}

}  // namespace atompivot
