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

#include "atompivot/sweep.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "atompivot/atom_pivot.h"
#include "atompivot/random.h"
#include "atompivot/smoothing.h"
#include "atompivot/synth.h"

namespace atompivot {
namespace {

constexpr absl::string_view kCsvHeader =
    "seed,eps,algo,cost,wall_ms,atom_steps,pivot_steps";

double RoundToCsvPrecision(double eps) {
  double out = 0;
  const bool ok = absl::SimpleAtod(absl::StrFormat("%.10g", eps), &out);
  return ok ? out : eps;
}

double RoundMillis(double ms) { return std::round(ms * 1000.0) / 1000.0; }

uint64_t EpsKey(double eps) { return std::bit_cast<uint64_t>(eps); }

// All records of one (seed, eps) cell.
absl::StatusOr<std::vector<SweepRecord>> RunCell(const SweepConfig& cfg,
                                                 uint64_t seed, double eps) {
  absl::StatusOr<PlantedInstance> inst = GeneratePlanted(
      cfg.n, cfg.k, eps, DeriveSeed(seed, {EpsKey(eps), 0x5eed}));
  if (!inst.ok()) return inst.status();
  std::vector<SweepRecord> out;
  for (Algorithm algo : cfg.algorithms) {
    SweepRecord rec{seed, eps, algo, 0, 0, 0, 0};
    if (algo == Algorithm::kPlanted) {
      rec.cost = PlantedCost(*inst);
      out.push_back(rec);
      continue;
    }
    Graph g = inst->graph;
    Rng rng(DeriveSeed(seed, {EpsKey(eps), static_cast<uint64_t>(algo) + 1}));
    absl::StatusOr<ClusteringRun> run;
    switch (algo) {
      case Algorithm::kPivot: run = RunPivotBaseline(g, rng); break;
      case Algorithm::kAtom: run = RunAtomOnly(g, cfg.goodness, rng); break;
      case Algorithm::kAtomPivot: run = RunAtomPivot(g, cfg.goodness, rng); break;
      case Algorithm::kPlanted: break;
    }
    if (!run.ok()) return run.status();
    rec.cost = run->summary.total_cost;
    rec.wall_ms = cfg.record_timing ? RoundMillis(run->summary.wall_ms) : 0;
    rec.atom_steps = run->summary.atom_steps;
    rec.pivot_steps = run->summary.pivot_steps;
    out.push_back(rec);
  }
  return out;
}

auto RecordKey(const SweepRecord& r) {
  return std::make_tuple(r.seed, r.eps, static_cast<int>(r.algo));
}

}  // namespace

absl::string_view AlgorithmName(Algorithm algo) {
  switch (algo) {
    case Algorithm::kPivot: return "pivot";
    case Algorithm::kAtom: return "atom";
    case Algorithm::kAtomPivot: return "atom_pivot";
    case Algorithm::kPlanted: return "planted";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(absl::string_view name) {
  if (name == "atom-pivot") return Algorithm::kAtomPivot;
  for (Algorithm a : kAllAlgorithms) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

std::vector<double> LogSpacedGrid(double lo, double hi, int points) {
  std::vector<double> grid;
  if (points <= 0) return grid;
  if (points == 1) return {RoundToCsvPrecision(lo)};
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < points; ++i) {
    grid.push_back(RoundToCsvPrecision(std::exp(a + (b - a) * i / (points - 1))));
  }
  return grid;
}

absl::Status ValidateSweepConfig(const SweepConfig& cfg) {
  if (cfg.n < 1 || cfg.k < 1) {
    return absl::InvalidArgumentError("sweep: n and k must be >= 1");
  }
  if (cfg.eps_grid.empty() || cfg.seeds.empty() || cfg.algorithms.empty()) {
    return absl::InvalidArgumentError("sweep: empty grid, seeds or algorithms");
  }
  if (!std::is_sorted(cfg.eps_grid.begin(), cfg.eps_grid.end())) {
    return absl::InvalidArgumentError("sweep: eps grid must be ascending");
  }
  for (double eps : cfg.eps_grid) {
    if (!(eps >= 0 && eps <= 1)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("sweep: noise %g outside [0,1]", eps));
    }
  }
  const bool needs_finder =
      std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(), [](Algorithm a) {
        return a == Algorithm::kAtom || a == Algorithm::kAtomPivot;
      });
  if (needs_finder) return cfg.goodness.Validate();
  return absl::OkStatus();
}

absl::StatusOr<std::vector<SweepRecord>> RunSweep(const SweepConfig& cfg) {
  if (absl::Status s = ValidateSweepConfig(cfg); !s.ok()) return s;
  std::vector<std::pair<uint64_t, double>> cells;
  for (uint64_t seed : cfg.seeds) {
    for (double eps : cfg.eps_grid) cells.emplace_back(seed, eps);
  }
  std::vector<SweepRecord> records;
  absl::Status error = absl::OkStatus();
  std::mutex mu;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      absl::StatusOr<std::vector<SweepRecord>> cell =
          RunCell(cfg, cells[i].first, cells[i].second);
      std::lock_guard<std::mutex> lock(mu);
      if (!cell.ok()) {
        if (error.ok()) error = cell.status();
        continue;
      }
      records.insert(records.end(), cell->begin(), cell->end());
    }
  };
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (!error.ok()) return error;
  std::sort(records.begin(), records.end(),
            [](const SweepRecord& a, const SweepRecord& b) {
              return RecordKey(a) < RecordKey(b);
            });
  return records;
}

std::string FormatSweepCsv(const std::vector<SweepRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SweepRecord& r : records) {
    absl::StrAppendFormat(&out, "%d,%.10g,%s,%d,%.3f,%d,%d\n", r.seed, r.eps,
                          AlgorithmName(r.algo), r.cost, r.wall_ms,
                          r.atom_steps, r.pivot_steps);
  }
  return out;
}

absl::StatusOr<std::vector<SweepRecord>> ParseSweepCsv(absl::string_view text) {
  std::vector<absl::string_view> lines =
      absl::StrSplit(text, '\n', absl::SkipEmpty());
  if (lines.empty() || lines[0] != kCsvHeader) {
    return absl::InvalidArgumentError("sweep csv: missing header");
  }
  std::vector<SweepRecord> out;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<absl::string_view> f = absl::StrSplit(lines[i], ',');
    SweepRecord r;
    std::optional<Algorithm> algo =
        f.size() == 7 ? ParseAlgorithm(f[2]) : std::nullopt;
    if (!algo || !absl::SimpleAtoi(f[0], &r.seed) ||
        !absl::SimpleAtod(f[1], &r.eps) || !absl::SimpleAtoi(f[3], &r.cost) ||
        !absl::SimpleAtod(f[4], &r.wall_ms) ||
        !absl::SimpleAtoi(f[5], &r.atom_steps) ||
        !absl::SimpleAtoi(f[6], &r.pivot_steps)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("sweep csv: bad line %d: %s", i + 1, lines[i]));
    }
    r.algo = *algo;
    out.push_back(r);
  }
  return out;
}

absl::Status WriteSweepCsv(const std::vector<SweepRecord>& records,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError("cannot write " + path);
  out << FormatSweepCsv(records);
  return out ? absl::OkStatus() : absl::DataLossError("write failed: " + path);
}

absl::StatusOr<std::vector<SweepRecord>> ReadSweepCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseSweepCsv(buffer.str());
}

absl::StatusOr<SeriesMap> BuildSeries(const std::vector<SweepRecord>& records,
                                      int window) {
  // algo -> eps -> (sum, count)
  std::map<Algorithm, std::map<double, std::pair<double, int64_t>>> sums;
  for (const SweepRecord& r : records) {
    auto& cell = sums[r.algo][r.eps];
    cell.first += static_cast<double>(r.cost);
    ++cell.second;
  }
  SeriesMap series;
  for (const auto& [algo, by_eps] : sums) {
    std::vector<SeriesPoint>& points = series[algo];
    std::vector<double> means;
    for (const auto& [eps, sum] : by_eps) {
      const double mean = sum.first / static_cast<double>(sum.second);
      points.push_back({eps, mean, 0, mean == 0});
      means.push_back(mean);
    }
    absl::StatusOr<std::vector<double>> smoothed = SmoothLogSpace(means, window);
    if (!smoothed.ok()) return smoothed.status();
    for (size_t i = 0; i < points.size(); ++i) points[i].smoothed = (*smoothed)[i];
  }
  return series;
}

std::string FormatSeriesCsv(const SeriesMap& series) {
  std::string out = "algo,eps,mean_cost,smoothed,floored\n";
  for (const auto& [algo, points] : series) {
    for (const SeriesPoint& p : points) {
      absl::StrAppendFormat(&out, "%s,%.10g,%.6f,%.6f,%d\n", AlgorithmName(algo),
                            p.eps, p.mean_cost, p.smoothed, p.floored ? 1 : 0);
    }
  }
  return out;
}

}  // namespace atompivot
