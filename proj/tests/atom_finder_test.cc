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

#include "atompivot/atom_finder.h"

#include <cmath>
#include <sstream>

#include "atompivot/synth.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace atompivot {
namespace {

using ::atompivot::testing::AddClique;
using ::atompivot::testing::MakeGraph;
using ::atompivot::testing::Range;

constexpr double kDelta = 0.000287;

TEST(CopiesTest, InitialCopies) {
  EXPECT_EQ(InitialCopies(100, 1000, kDelta), 4u);
  EXPECT_EQ(InitialCopies(1, 1000, kDelta),
            static_cast<uint64_t>(std::ceil(2 * (1 + kDelta) * std::log(1000.0))));
  uint64_t prev = InitialCopies(3, 1000, kDelta);
  for (int64_t d = 4; d < 5000; ++d) {
    const uint64_t c = InitialCopies(d, 1000, kDelta);
    EXPECT_LE(c, prev);
    prev = c;
  }
}

TEST(CopiesTest, HitCopies) {
  EXPECT_EQ(HitCopies(100, 1000, kDelta), 105u);
  for (int64_t d = 1; d < 100000; d *= 3) EXPECT_GE(HitCopies(d, 1000, kDelta), 1u);
}

// Hits received while the degree halves supply about ln n / (delta ln d0)
// copies, enough for the ceil(delta d) hits a good cluster needs.
TEST(CopiesTest, HalvingSupply) {
  const int64_t n = 1000;
  for (int64_t d0 : {16, 100, 999}) {
    double total = 0;
    for (int64_t d = d0 - 1; d >= d0 / 2; --d) {
      total += static_cast<double>(HitCopies(d, n, kDelta));
    }
    const double floor = 2 * (1 + kDelta) * std::log(static_cast<double>(n)) /
                         (kDelta * d0 * std::max(1.0, std::log(d0 / (1 + kDelta)))) *
                         (d0 / 2.0);
    EXPECT_GE(total, floor) << d0;
  }
}

TEST(CopyQueueTest, LifoWithRuns) {
  CopyQueue q;
  EXPECT_TRUE(q.empty());
  q.Push(1, 2);
  q.Push(2, 1);
  q.Push(2, 2);
  q.Push(7, 0);
  EXPECT_EQ(q.size(), 5u);
  EXPECT_EQ(q.Top(), 2u);
  EXPECT_EQ(q.TopRun(), 3u);
  q.PopTop(2);
  EXPECT_EQ(q.Pop(), 2u);
  EXPECT_EQ(q.Pop(), 1u);
  EXPECT_EQ(q.Pop(), 1u);
  EXPECT_TRUE(q.empty());
  EXPECT_THROW(q.Pop(), std::logic_error);
}

TEST(AtomFinderTest, SeedsInitialCopies) {
  Graph g = testing::DisjointCliques({5, 3});
  absl::StatusOr<AtomFinder> f = AtomFinder::Create(g, GoodnessParams::Default());
  ASSERT_TRUE(f.ok());
  const uint64_t expected =
      5 * InitialCopies(5, 8, kDelta) + 3 * InitialCopies(3, 8, kDelta);
  EXPECT_EQ(f->queue().size(), expected);
  EXPECT_EQ(f->stats().initial_copies, expected);
  EXPECT_EQ(f->queue().Top(), 7u);  // seeded in id order, popped LIFO
  EXPECT_FALSE(AtomFinder::Create(g, {0.5, 0.1, 0.1}).ok());
}

TEST(AtomFinderTest, BoundaryEventsEnqueueHitCopies) {
  // Isolated clique {0, 1, 2}; vertex 5 adjacent to 3 and 4.
  Graph g = MakeGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}, {4, 5}});
  AtomFinder f = *AtomFinder::Create(g, GoodnessParams::Default());
  const uint64_t before = f.queue().size();
  std::vector<VertexId> tri = {0, 1, 2};
  f.OnClusterRemoved(g.RemoveCluster(tri));
  EXPECT_EQ(f.queue().size(), before);

  std::vector<VertexId> pair = {3, 4};
  std::vector<BoundaryEvent> events = g.RemoveCluster(pair);
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].degree_after, 2);
  EXPECT_EQ(events[1].degree_after, 1);
  f.OnClusterRemoved(events);
  EXPECT_EQ(f.queue().size(),
            before + HitCopies(2, 6, kDelta) + HitCopies(1, 6, kDelta));
  EXPECT_EQ(f.queue().Top(), 5u);
}

TEST(AtomFinderTest, EmptyQueueAndDeadCopies) {
  Graph g = MakeGraph(2, {});
  AtomFinder f = *AtomFinder::Create(g, GoodnessParams::Default());
  std::vector<VertexId> one = {1};
  g.RemoveCluster(one);
  Rng rng(1);
  // Vertex 1 is on top of the queue and dead.
  ReportResult r = f.TryReport(rng);
  EXPECT_EQ(r.kind, ReportResult::Kind::kPopped);
  EXPECT_EQ(f.stats().dead_pops, 1u);

  Graph empty = MakeGraph(1, {});
  AtomFinder e = *AtomFinder::Create(empty, GoodnessParams::Default());
  std::vector<VertexId> zero = {0};
  empty.RemoveCluster(zero);
  EXPECT_EQ(e.AdvanceToReport(rng).kind, ReportResult::Kind::kQueueEmpty);
  EXPECT_EQ(e.TryReport(rng).kind, ReportResult::Kind::kQueueEmpty);
}

// A 50-clique next to a sparse random region is reported within |Q| pops.
Graph CliqueAndNoise(Rng& rng) {
  std::vector<Edge> edges;
  AddClique(edges, Range(0, 50));
  for (VertexId u = 50; u < 90; ++u) {
    for (VertexId v = u + 1; v < 90; ++v) {
      if (Uniform01(rng) < 0.3) edges.emplace_back(u, v);
    }
  }
  return MakeGraph(90, edges);
}

TEST(AtomFinderTest, FindsIsolatedClique) {
  Rng rng(2);
  Graph g = CliqueAndNoise(rng);
  AtomFinder f = *AtomFinder::Create(g, GoodnessParams::Default());
  const uint64_t budget = f.queue().size();
  uint64_t pops = 0;
  std::vector<VertexId> found;
  while (pops <= budget) {
    ReportResult r = f.TryReport(rng);
    pops += r.pops;
    if (r.kind == ReportResult::Kind::kFound && r.cluster.size() == 50) {
      found = r.cluster;
      break;
    }
    if (r.kind == ReportResult::Kind::kQueueEmpty) break;
  }
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, Range(0, 50));
}

// Bulk consumption reaches the same report after the same number of pops
// when every acceptance probability is 0 or 1.
TEST(AtomFinderTest, AdvanceMatchesSinglePops) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Rng graph_rng(seed);
    Graph g = CliqueAndNoise(graph_rng);
    AtomFinder single = *AtomFinder::Create(g, GoodnessParams::Default());
    AtomFinder bulk = *AtomFinder::Create(g, GoodnessParams::Default());
    Rng r1(seed), r2(seed);
    ReportResult a;
    uint64_t pops = 0;
    do {
      a = single.TryReport(r1);
      pops += a.pops;
    } while (a.kind == ReportResult::Kind::kPopped);
    ReportResult b = bulk.AdvanceToReport(r2);
    EXPECT_EQ(static_cast<int>(a.kind), static_cast<int>(b.kind));
    EXPECT_EQ(pops, b.pops);
    EXPECT_EQ(a.cluster, b.cluster);
    EXPECT_EQ(single.queue().size(), bulk.queue().size());
    EXPECT_EQ(single.stats().checks, bulk.stats().checks);
  }
}

// Every report is eps'-good on the graph it was reported from.
TEST(AtomFinderTest, ReportsAreEpsPrimeGood) {
  const GoodnessParams gp = GoodnessParams::Default();
  const double eps_prime = *ReportedGoodnessBound(gp);
  int reports = 0;
  for (double noise : {0.0, 0.001, 0.003, 0.01, 0.05}) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      PlantedInstance inst = *GeneratePlanted(200, 4, noise, seed);
      Graph& g = inst.graph;
      AtomFinder f = *AtomFinder::Create(g, gp);
      Rng rng(seed);
      while (!g.empty()) {
        ReportResult r = f.AdvanceToReport(rng);
        if (r.kind == ReportResult::Kind::kQueueEmpty) break;
        ASSERT_EQ(r.kind, ReportResult::Kind::kFound);
        ++reports;
        EXPECT_TRUE(IsGood(g, r.cluster, eps_prime));
        EXPECT_TRUE(IsGood(g, r.cluster, *CleanGoodnessBound(f.clean_params())));
        f.OnClusterRemoved(g.RemoveCluster(r.cluster));
      }
    }
  }
  EXPECT_GT(reports, 20);
}

TEST(AtomFinderTest, EventLog) {
  Graph g = testing::DisjointCliques({3});
  AtomFinder f = *AtomFinder::Create(g, GoodnessParams::Default());
  std::ostringstream log;
  f.set_event_log(&log);
  Rng rng(1);
  ReportResult r = f.TryReport(rng);
  EXPECT_EQ(r.kind, ReportResult::Kind::kFound);
  EXPECT_NE(log.str().find("found"), std::string::npos);
}

}  // namespace
}  // namespace atompivot
