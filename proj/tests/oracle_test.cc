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

#include "atompivot/pivot.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace atompivot {
namespace {

using ::atompivot::testing::MakeGraph;

TEST(RationalTest, ReducesAndOrders) {
  Rational a(6, 4);
  EXPECT_EQ(a.num(), 3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(a.ToString(), "3/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_DOUBLE_EQ(Rational(1, 4).ToDouble(), 0.25);
}

TEST(ExactOptTest, Examples) {
  EXPECT_EQ(ExactOpt(testing::DisjointCliques({3}))->cost, 0);
  EXPECT_EQ(ExactOpt(MakeGraph(3, {{0, 1}, {1, 2}}))->cost, 1);
  absl::StatusOr<OptResult> k4pm =
      ExactOpt(MakeGraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  ASSERT_TRUE(k4pm.ok());
  EXPECT_EQ(k4pm->cost, 2);
  EXPECT_EQ(k4pm->clustering.num_clusters(), 1);
}

TEST(ExactOptTest, ClusteringAttainsReportedCost) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::RandomGraph(1 + trial % 9, Uniform01(rng), rng);
    absl::StatusOr<OptResult> opt = ExactOpt(g);
    ASSERT_TRUE(opt.ok());
    EXPECT_EQ(*ClusteringCost(g, opt->clustering), opt->cost);
  }
}

TEST(ExactOptTest, NeverWorseThanPivot) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::RandomGraph(8, 0.5, rng);
    const int64_t opt = ExactOpt(g)->cost;
    Graph copy = g;
    EXPECT_LE(opt, *ClusteringCost(g, RunPivot(copy, rng).clustering));
  }
}

TEST(ExactOptTest, WorksOnRemainingVertices) {
  Graph g = MakeGraph(5, {{0, 1}, {1, 2}, {3, 4}});
  std::vector<VertexId> drop = {1};
  g.RemoveCluster(drop);
  // Remaining: 0, 2 isolated and edge (3, 4).
  EXPECT_EQ(ExactOpt(g)->cost, 0);
  EXPECT_EQ(ExactPivotExpectation(g)->ToDouble(), 0.0);
}

TEST(ExactOptTest, SizeLimits) {
  Graph big = testing::DisjointCliques({kMaxExactOptVertices + 1});
  EXPECT_FALSE(ExactOpt(big).ok());
  Graph bigger = testing::DisjointCliques({kMaxPivotExpectationVertices + 1});
  EXPECT_FALSE(ExactPivotExpectation(bigger).ok());
}

TEST(ExactPivotExpectationTest, Examples) {
  EXPECT_EQ(*ExactPivotExpectation(testing::DisjointCliques({2, 3})),
            Rational(0));
  EXPECT_EQ(*ExactPivotExpectation(MakeGraph(3, {{0, 1}, {1, 2}})),
            Rational(1));
  EXPECT_EQ(
      *ExactPivotExpectation(MakeGraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})),
      Rational(3));
}

TEST(ExactPivotExpectationTest, StarIsAFraction) {
  // Star K_{1,3}. Center first (1/4): one cluster with 3 missing leaf pairs.
  // Leaf first (3/4): {leaf, center} cuts 2 edges, the rest are singletons.
  Graph star = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(*ExactPivotExpectation(star), Rational(9, 4));
}

}  // namespace
}  // namespace atompivot
