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

#include "atompivot/synth.h"

#include <cmath>
#include <cstdio>

#include "atompivot/graph_io.h"
#include "gtest/gtest.h"

namespace atompivot {
namespace {

TEST(SynthTest, NoiselessIsDisjointCliques) {
  PlantedInstance inst = *GeneratePlanted(100, 7, 0, 1);
  EXPECT_EQ(inst.flips, 0);
  EXPECT_EQ(PlantedCost(inst), 0);
  int64_t intra_pairs = 0;
  for (const auto& c : inst.planted.clusters()) {
    const auto s = static_cast<int64_t>(c.size());
    intra_pairs += s * (s - 1) / 2;
  }
  EXPECT_EQ(inst.graph.num_edges(), intra_pairs);
  EXPECT_LE(inst.planted.num_clusters(), 7);
}

TEST(SynthTest, FullNoiseSingleClusterIsEmpty) {
  PlantedInstance inst = *GeneratePlanted(30, 1, 1, 4);
  EXPECT_EQ(inst.graph.num_edges(), 0);
  EXPECT_EQ(inst.flips, 30 * 29 / 2);
}

TEST(SynthTest, FlipCountIsBinomial) {
  const double mean = 0.01 * 1000 * 999 / 2;
  const double slack = 4 * std::sqrt(mean * 0.99);
  double total = 0;
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    PlantedInstance inst = *GeneratePlanted(1000, 10, 0.01, seed);
    EXPECT_NEAR(static_cast<double>(inst.flips), mean, slack);
    total += static_cast<double>(inst.flips);
  }
  EXPECT_NEAR(total / 50, mean, slack / std::sqrt(50.0));
}

TEST(SynthTest, PlantedCostEqualsFlips) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const int64_t n = 1 + static_cast<int64_t>(seed * 7 % 300);
    const int64_t k = 1 + static_cast<int64_t>(seed % 9);
    const double eps = 0.3 * static_cast<double>(seed % 5) / 4;
    PlantedInstance inst = *GeneratePlanted(n, k, eps, seed);
    EXPECT_EQ(PlantedCost(inst), inst.flips);
  }
}

TEST(SynthTest, SameSeedSameInstance) {
  PlantedInstance a = *GeneratePlanted(200, 5, 0.05, 9);
  PlantedInstance b = *GeneratePlanted(200, 5, 0.05, 9);
  PlantedInstance c = *GeneratePlanted(200, 5, 0.05, 10);
  EXPECT_EQ(a.graph.Edges(), b.graph.Edges());
  EXPECT_EQ(a.planted.Canonical(), b.planted.Canonical());
  EXPECT_NE(a.graph.Edges(), c.graph.Edges());
}

TEST(SynthTest, RejectsBadArguments) {
  EXPECT_FALSE(GeneratePlanted(0, 1, 0, 1).ok());
  EXPECT_FALSE(GeneratePlanted(5, 0, 0, 1).ok());
  EXPECT_FALSE(GeneratePlanted(5, 1, -0.1, 1).ok());
  EXPECT_FALSE(GeneratePlanted(5, 1, 1.1, 1).ok());
}

TEST(SynthTest, WritesGraphAndSidecar) {
  PlantedInstance inst = *GeneratePlanted(50, 3, 0.1, 2);
  const std::string path = ::testing::TempDir() + "/planted_graph.txt";
  ASSERT_TRUE(WritePlantedInstance(inst, path).ok());
  absl::StatusOr<Graph> g = ReadEdgeListFile(path);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->Edges(), inst.graph.Edges());
  absl::StatusOr<Clustering> c = ReadClusteringFile(path + ".planted", 50);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(*ClusteringCost(*g, *c), inst.flips);
  std::remove(path.c_str());
  std::remove((path + ".planted").c_str());
}

}  // namespace
}  // namespace atompivot
