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

#ifndef ATOMPIVOT_SWEEP_H_
#define ATOMPIVOT_SWEEP_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "atompivot/goodness.h"

namespace atompivot {

enum class Algorithm { kPivot, kAtom, kAtomPivot, kPlanted };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kPivot, Algorithm::kAtom, Algorithm::kAtomPivot,
    Algorithm::kPlanted};

// "pivot", "atom", "atom_pivot", "planted".
absl::string_view AlgorithmName(Algorithm algo);
// Accepts the names above and "atom-pivot".
std::optional<Algorithm> ParseAlgorithm(absl::string_view name);

// One (seed, noise, algorithm) cell of a sweep.
struct SweepRecord {
  uint64_t seed = 0;
  double eps = 0;
  Algorithm algo = Algorithm::kPivot;
  int64_t cost = 0;
  double wall_ms = 0;
  int64_t atom_steps = 0;
  int64_t pivot_steps = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepConfig {
  int64_t n = 1000;
  int64_t k = 10;
  std::vector<double> eps_grid;  // ascending
  std::vector<uint64_t> seeds = {1};
  GoodnessParams goodness;
  std::vector<Algorithm> algorithms = {std::begin(kAllAlgorithms),
                                       std::end(kAllAlgorithms)};
  int threads = 1;
  // When false, wall_ms is written as 0 so that output bytes depend only on
  // the configuration.
  bool record_timing = true;
};

// `points` log-spaced values in [lo, hi], each rounded to the 10 significant
// digits used in the CSV.
std::vector<double> LogSpacedGrid(double lo, double hi, int points);

absl::Status ValidateSweepConfig(const SweepConfig& cfg);

// Runs every algorithm of `cfg` on one planted instance per (seed, eps) cell.
// The instance seed is derived from (seed, eps) and each algorithm's random
// stream from (seed, eps, algorithm), so results do not depend on `threads`.
// Records are sorted by (seed, eps, algorithm).
absl::StatusOr<std::vector<SweepRecord>> RunSweep(const SweepConfig& cfg);

// CSV with header seed,eps,algo,cost,wall_ms,atom_steps,pivot_steps; eps with
// 10 significant digits, wall_ms with 3 decimals.
std::string FormatSweepCsv(const std::vector<SweepRecord>& records);
absl::StatusOr<std::vector<SweepRecord>> ParseSweepCsv(absl::string_view text);
absl::Status WriteSweepCsv(const std::vector<SweepRecord>& records,
                           const std::string& path);
absl::StatusOr<std::vector<SweepRecord>> ReadSweepCsv(const std::string& path);

struct SeriesPoint {
  double eps = 0;
  double mean_cost = 0;  // over seeds
  double smoothed = 0;
  bool floored = false;  // mean_cost was 0 and entered the log as 0.5
};
using SeriesMap = std::map<Algorithm, std::vector<SeriesPoint>>;

// Per algorithm: mean cost over seeds at each eps, smoothed by
// SmoothLogSpace with the given window.
absl::StatusOr<SeriesMap> BuildSeries(const std::vector<SweepRecord>& records,
                                      int window);

// algo,eps,mean_cost,smoothed,floored
std::string FormatSeriesCsv(const SeriesMap& series);

}  // namespace atompivot

#endif  // ATOMPIVOT_SWEEP_H_
