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

#include <cmath>

#include "atompivot/goodness.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace atompivot {
namespace {

using ::atompivot::testing::AddClique;
using ::atompivot::testing::MakeGraph;
using ::atompivot::testing::Range;

// Exact form of "v must join K": 2 inside > |K| + outside + 2 eps' |K|.
bool MustJoin(const VertexAffinity& a, double eps_prime) {
  return a.ExpansionMargin(eps_prime) > kExpansionTolerance;
}

TEST(AffinityTest, Examples) {
  // K = {1, 2, 3, 4} clique, v = 5 adjacent to all of K only.
  std::vector<Edge> edges;
  AddClique(edges, Range(1, 5));
  for (VertexId u = 1; u < 5; ++u) edges.emplace_back(5, u);
  Graph g = MakeGraph(7, edges);
  VertexSet k = {1, 2, 3, 4};
  VertexAffinity a = Affinity(g, k, 5);
  EXPECT_EQ(a.inside, 4);
  EXPECT_EQ(a.outside, 1);
  EXPECT_DOUBLE_EQ(a.beta(), 1);
  EXPECT_DOUBLE_EQ(a.alpha(), 0.25);
  EXPECT_DOUBLE_EQ(a.inclusion_probability(), 0.8);
  EXPECT_DOUBLE_EQ(a.alpha() + a.beta(), g.Degree(5) / 4.0);

  VertexAffinity none = Affinity(g, k, 6);
  EXPECT_EQ(none.inside, 0);
  EXPECT_EQ(none.inclusion_probability(), 0);
  EXPECT_GE(none.alpha(), 1.0 / 4);

  VertexAffinity half{2, 2, 4};
  EXPECT_DOUBLE_EQ(half.inclusion_probability(), 1.0 / 3);
}

TEST(ExpandTest, Examples) {
  Graph iso = testing::DisjointCliques({5, 3});
  std::vector<VertexId> k = Range(0, 5);
  EXPECT_EQ(Expand(iso, k, 0.1), k);

  std::vector<Edge> edges;
  AddClique(edges, Range(1, 5));
  for (VertexId u = 1; u < 5; ++u) edges.emplace_back(5, u);
  Graph g = MakeGraph(6, edges);
  std::vector<VertexId> k4 = Range(1, 5);
  std::vector<VertexId> expanded = Expand(g, k4, 0.1);
  EXPECT_EQ(expanded, (std::vector<VertexId>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(IsExpansionClosed(g, expanded, 0.1));
  EXPECT_FALSE(IsExpansionClosed(g, k4, 0.1));
  EXPECT_THROW(Expand(g, k4, 1.0 / 6), std::logic_error);
}

// Chains of absorption: each new vertex only qualifies once its predecessor
// is in.
TEST(ExpandTest, AbsorbsTransitively) {
  std::vector<Edge> edges;
  AddClique(edges, Range(0, 6));
  // 6 sees all of K; 7 sees 1..5 and 6.
  for (VertexId u = 0; u < 6; ++u) edges.emplace_back(6, u);
  for (VertexId u = 1; u < 7; ++u) edges.emplace_back(7, u);
  Graph g = MakeGraph(8, edges);
  std::vector<VertexId> expanded = Expand(g, Range(0, 6), 0.1);
  std::sort(expanded.begin(), expanded.end());
  EXPECT_EQ(expanded, Range(0, 8));
}

// Certificate and p_v <= 1/2 + eps' after expansion, on random graphs.
TEST(ExpandTest, CertificateOnRandomGraphs) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::RandomGraph(25, Uniform01(rng), rng);
    std::vector<VertexId> k;
    for (VertexId v = 0; v < 25; ++v) {
      if (Uniform01(rng) < 0.3) k.push_back(v);
    }
    if (k.empty()) continue;
    const double eps_prime = Uniform01(rng) / 6.01;
    std::vector<VertexId> expanded = Expand(g, k, eps_prime);
    ASSERT_TRUE(std::equal(k.begin(), k.end(), expanded.begin()));
    VertexSet ks(expanded.begin(), expanded.end());
    for (VertexId v : g.LiveVertices()) {
      if (ks.contains(v)) continue;
      const VertexAffinity a = Affinity(g, ks, v);
      EXPECT_FALSE(MustJoin(a, eps_prime));
      EXPECT_LE(a.inclusion_probability(), 0.5 + eps_prime + 1e-12);
    }
  }
}

TEST(SampleClusterTest, IsolatedCliqueUnchanged) {
  Graph g = testing::DisjointCliques({6, 2});
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(SampleCluster(g, Range(0, 6), rng), Range(0, 6));
  }
}

TEST(SampleClusterTest, InclusionFrequency) {
  // v = 5 has p_v = 4 / (4 + 1) = 0.8.
  std::vector<Edge> edges;
  AddClique(edges, Range(1, 5));
  for (VertexId u = 1; u < 5; ++u) edges.emplace_back(5, u);
  Graph g = MakeGraph(6, edges);
  Rng rng(2);
  constexpr int kTrials = 100000;
  int hits = 0;
  for (int t = 0; t < kTrials; ++t) {
    hits += SampleCluster(g, Range(1, 5), rng).size() == 5;
  }
  EXPECT_NEAR(static_cast<double>(hits) / kTrials, 0.8, 0.005);
}

// Only neighbors of K are scanned: work is at most the total degree of K
// plus the degrees of the candidates.
TEST(SampleClusterTest, WorkIsLocal) {
  std::vector<Edge> edges;
  AddClique(edges, Range(0, 10));
  edges.emplace_back(0, 10);
  AddClique(edges, Range(10, 20));
  AddClique(edges, Range(20, 400));  // far away
  Graph g = MakeGraph(400, edges);
  Rng rng(3);
  int64_t work = 0;
  SampleCluster(g, Range(0, 10), rng, &work);
  int64_t local = 0;
  for (VertexId v = 0; v <= 10; ++v) local += g.Degree(v);
  EXPECT_GT(work, 0);
  EXPECT_LE(work, local);
}

// E|C \ K| <= eps' |K| on eps'-good K.
TEST(SampleClusterTest, ExpectedOverflowBound) {
  Rng graph_rng(4);
  int fixtures = 0;
  for (int attempt = 0; attempt < 200 && fixtures < 10; ++attempt) {
    // A 12-clique with a few edges removed and sparse attachments.
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 12; ++u) {
      for (VertexId v = u + 1; v < 12; ++v) {
        if (Uniform01(graph_rng) > 0.03) edges.emplace_back(u, v);
      }
      for (VertexId v = 12; v < 20; ++v) {
        if (Uniform01(graph_rng) < 0.06) edges.emplace_back(u, v);
      }
    }
    Graph g = MakeGraph(20, edges);
    std::vector<VertexId> k = Range(0, 12);
    const double eps_prime = 0.12;
    if (!IsGood(g, k, eps_prime)) continue;
    ++fixtures;
    std::vector<VertexId> expanded = Expand(g, k, eps_prime);
    Rng rng(attempt);
    constexpr int kTrials = 20000;
    double sum = 0, sum_sq = 0;
    for (int t = 0; t < kTrials; ++t) {
      const double extra = static_cast<double>(
          SampleCluster(g, expanded, rng).size() - k.size());
      sum += extra;
      sum_sq += extra * extra;
    }
    const double mean = sum / kTrials;
    const double se = std::sqrt(std::max(0.0, sum_sq / kTrials - mean * mean) / kTrials);
    EXPECT_LE(mean, eps_prime * 12 + 3 * se);
  }
  EXPECT_EQ(fixtures, 10);
}

}  // namespace
}  // namespace atompivot
