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

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.h"

namespace atompivot {
namespace {

using ::atompivot::testing::MakeGraph;
using ::atompivot::testing::Range;

std::vector<VertexId> All(const Graph& g) {
  std::vector<VertexId> v(g.LiveVertices().begin(), g.LiveVertices().end());
  std::sort(v.begin(), v.end());
  return v;
}

// K_n without the edge (0, 1).
Graph CliqueMinusEdge(int n) {
  std::vector<Edge> edges;
  testing::AddClique(edges, Range(0, n));
  edges.erase(edges.begin());
  return MakeGraph(n, edges);
}

TEST(GoodnessTest, IsGoodExamples) {
  Graph k5 = testing::DisjointCliques({5});
  EXPECT_TRUE(IsGood(k5, All(k5), 0));

  Graph g = CliqueMinusEdge(4);
  EXPECT_TRUE(IsGood(g, All(g), 0.25));
  EXPECT_FALSE(IsGood(g, All(g), 0.24));
  EXPECT_DOUBLE_EQ(Goodness(g, All(g)), 0.25);

  Graph two = testing::DisjointCliques({4, 4});
  EXPECT_FALSE(IsGood(two, All(two), 0.4));
}

TEST(GoodnessTest, IsGoodOnAverageExamples) {
  Graph k5 = testing::DisjointCliques({5});
  EXPECT_TRUE(IsGoodOnAverage(k5, All(k5), 0));

  Graph g = CliqueMinusEdge(4);
  EXPECT_TRUE(IsGoodOnAverage(g, All(g), 0.125));
  EXPECT_FALSE(IsGoodOnAverage(g, All(g), 0.124));
}

TEST(GoodnessTest, GoodImpliesGoodOnAverage) {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testing::RandomGraph(10, Uniform01(rng), rng);
    std::vector<VertexId> c;
    for (VertexId v = 0; v < 10; ++v) {
      if (Uniform01(rng) < 0.6) c.push_back(v);
    }
    if (c.empty()) continue;
    const double eps = Uniform01(rng);
    if (IsGood(g, c, eps)) EXPECT_TRUE(IsGoodOnAverage(g, c, eps));
  }
}

TEST(CleanTest, Examples) {
  Graph k5 = testing::DisjointCliques({5});
  EXPECT_EQ(Clean(k5, All(k5), {0.01, 0.01}), All(k5));

  Graph g = CliqueMinusEdge(5);
  EXPECT_TRUE(Clean(g, All(g), {0.1, 0.3}).empty());
  EXPECT_EQ(Clean(g, All(g), {0.2, 0.3}), All(g));
}

TEST(CleanTest, KeepsInputOrderAndSetOverload) {
  Graph g = CliqueMinusEdge(6);
  std::vector<VertexId> c = {5, 3, 0, 4, 1, 2};
  // Threshold 0.2 * 6 = 1.2 admits everyone (0 and 1 differ by 1).
  EXPECT_EQ(Clean(g, c, {0.2, 0.1}), c);
  VertexSet set(c.begin(), c.end());
  std::vector<VertexId> from_set = Clean(g, set, {0.2, 0.1});
  std::sort(from_set.begin(), from_set.end());
  EXPECT_EQ(from_set, All(g));
}

TEST(CleanTest, VertexIsGoodExamples) {
  Graph k5 = testing::DisjointCliques({5});
  EXPECT_TRUE(VertexIsGood(k5, 0, {0.05, 0.05}));
  Graph iso = MakeGraph(1, {});
  EXPECT_TRUE(VertexIsGood(iso, 0, {0.05, 0.05}));
  // Bridge vertex 0 joined to two disjoint 8-cliques.
  std::vector<Edge> edges;
  testing::AddClique(edges, Range(1, 9));
  testing::AddClique(edges, Range(9, 17));
  for (VertexId v = 1; v < 17; ++v) edges.emplace_back(0, v);
  Graph bridge = MakeGraph(17, edges);
  EXPECT_FALSE(VertexIsGood(bridge, 0, {0.1, 0.1}));
}

// Membership is decided by exact integer comparison and every nonempty
// output satisfies the goodness bound.
TEST(CleanTest, MembershipAndSoundness) {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const int64_t n = 2 + static_cast<int64_t>(UniformIndex(rng, 30));
    const double base = Uniform01(rng);
    Graph g = testing::RandomGraph(n, base, rng);
    std::vector<VertexId> c;
    for (VertexId v = 0; v < n; ++v) {
      if (Uniform01(rng) < 0.7) c.push_back(v);
    }
    if (c.empty()) continue;
    const CleanParams p{0.5 * Uniform01(rng), 0.5 * Uniform01(rng)};
    const std::vector<VertexId> k = Clean(g, c, p);
    if (k.empty()) continue;
    VertexSet cs(c.begin(), c.end());
    for (VertexId u : k) {
      ASSERT_TRUE(cs.contains(u));
      EXPECT_LE(static_cast<double>(ClusterSymmetricDifference(g, u, cs)),
                p.alpha * static_cast<double>(c.size()));
    }
    EXPECT_GE(static_cast<double>(k.size()),
              (1 - p.beta) * static_cast<double>(c.size()));
    EXPECT_TRUE(IsGood(g, k, *CleanGoodnessBound(p)));
  }
}

TEST(ParamsTest, DefaultDerivedValues) {
  const GoodnessParams gp = GoodnessParams::Default();
  ASSERT_TRUE(gp.Validate().ok());
  const CleanParams p = *DeriveCleanParams(gp);
  EXPECT_NEAR(p.alpha, 0.0597212974240831, 1e-12);
  EXPECT_NEAR(p.beta, 0.0594001144493542, 1e-12);
  EXPECT_NEAR(*ReportedGoodnessBound(gp), 0.126644085017830, 1e-12);
  // Clean's bound at the derived parameters coincides with eps'.
  EXPECT_NEAR(*CleanGoodnessBound(p), *ReportedGoodnessBound(gp), 1e-12);
}

TEST(ParamsTest, CollapsedFormulas) {
  const double e = 0.05;
  const CleanParams p = *DeriveCleanParams({e, 0, 0});
  EXPECT_DOUBLE_EQ(p.alpha, 2 * e / (1 - e));
  EXPECT_DOUBLE_EQ(p.beta, 2 * e / (1 - e));
  EXPECT_DOUBLE_EQ(*ReportedGoodnessBound({e, 0, 0}), 4 * e / (1 - 3 * e));

  const CleanParams tiny = *DeriveCleanParams(GoodnessParams::WithEps(1e-9));
  EXPECT_LT(tiny.alpha, 1e-8);
  EXPECT_LT(tiny.beta, 1e-8);
}

TEST(ParamsTest, Validation) {
  EXPECT_FALSE(GoodnessParams({0, 0.1, 0.1}).Validate().ok());
  EXPECT_FALSE(GoodnessParams({0.1, 0, 0.1}).Validate().ok());
  EXPECT_FALSE(GoodnessParams({0.1, 0.1, 0.5}).Validate().ok());
  EXPECT_FALSE(GoodnessParams({1, 0.1, 0.1}).Validate().ok());
  // alpha = (0.8 + 0.02) / 0.6 > 1.
  EXPECT_FALSE(GoodnessParams({0.4, 0.01, 0.01}).Validate().ok());
  EXPECT_FALSE(DeriveCleanParams({0.4, 0.01, 0.01}).ok());
  EXPECT_FALSE(ReportedGoodnessBound({0.34, 0.01, 0.01}).ok());
}

TEST(BoundsTest, RatioExamples) {
  EXPECT_DOUBLE_EQ(*RoundingRatioBound(0), 2);
  EXPECT_NEAR(*RoundingRatioBound(0.126644085017830), 2.99631766765336, 1e-10);
  EXPECT_FALSE(RoundingRatioBound(0.5).ok());
  EXPECT_FALSE(RoundingRatioBound(-0.1).ok());

  EXPECT_DOUBLE_EQ(*PivotRatioBound(0), 3);
  EXPECT_NEAR(*PivotRatioBound(0.0287), 2.99917687499986, 1e-12);
  EXPECT_NEAR(*PivotRatioBound(1), 3 - 6.0 / 11.0, 1e-15);
  EXPECT_FALSE(PivotRatioBound(-1).ok());

  EXPECT_DOUBLE_EQ(*CleanGoodnessBound({0.1, 0.2}), 0.375);
  EXPECT_DOUBLE_EQ(*CleanGoodnessBound({0.1, 0}), 0.1);
  EXPECT_FALSE(CleanGoodnessBound({0.1, 1}).ok());
}

TEST(BoundsTest, EpsPrimeBelowOneSixthAtDefaults) {
  EXPECT_LT(*ReportedGoodnessBound(GoodnessParams::Default()), 1.0 / 6.0);
}

// Each evaluator is monotone in every argument on a 100-point grid.
TEST(BoundsTest, Monotonicity) {
  double prev = 0;
  for (int i = 0; i < 100; ++i) {
    const double r = *RoundingRatioBound(0.499 * i / 99);
    EXPECT_GT(r, prev);
    prev = r;
  }
  prev = 4;
  for (int i = 0; i < 100; ++i) {
    const double r = *PivotRatioBound(2.0 * i / 99);
    EXPECT_LE(r, prev);
    prev = r;
  }
  // eps' increases in each of eps, delta, gamma with the others fixed.
  for (int which = 0; which < 3; ++which) {
    prev = 0;
    for (int i = 0; i < 100; ++i) {
      GoodnessParams gp{0.03, 0.001, 0.001};
      const double x = 0.0001 + 0.05 * i / 99;
      (which == 0 ? gp.eps : which == 1 ? gp.delta : gp.gamma) = x;
      const double ep = *ReportedGoodnessBound(gp);
      EXPECT_GT(ep, prev) << which << " " << x;
      prev = ep;
    }
  }
}

}  // namespace
}  // namespace atompivot
