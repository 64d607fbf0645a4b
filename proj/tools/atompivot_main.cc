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

// Command-line front end: instance generation, single runs, cost and oracle
// spot checks, and the noise sweep with its CSV and SVG outputs.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "atompivot/atom_pivot.h"
#include "atompivot/graph_io.h"
#include "atompivot/oracle.h"
#include "atompivot/svg_plot.h"
#include "atompivot/sweep.h"
#include "atompivot/synth.h"

namespace atompivot {
namespace {

struct GlobalFlags {
  uint64_t seed = 1;
  double eps = 0.0287;
  std::optional<double> delta;
  std::optional<double> gamma;
  std::string out;

  GoodnessParams Goodness() const {
    GoodnessParams gp = GoodnessParams::WithEps(eps);
    if (delta) gp.delta = *delta;
    if (gamma) gp.gamma = *gamma;
    return gp;
  }
};

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status << "\n";
  return 1;
}

// Runs `body` and turns a failed status into exit code 1.
template <typename F>
int Guard(F&& body) {
  absl::Status status = body();
  return status.ok() ? 0 : Fail(status);
}

absl::Status RequireOut(const GlobalFlags& flags, const char* what) {
  if (flags.out.empty()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("--out is required for %s", what));
  }
  return absl::OkStatus();
}

absl::Status Gen(const GlobalFlags& flags, int64_t n, int64_t k,
                 double noise) {
  if (absl::Status s = RequireOut(flags, "gen"); !s.ok()) return s;
  absl::StatusOr<PlantedInstance> inst =
      GeneratePlanted(n, k, noise, flags.seed);
  if (!inst.ok()) return inst.status();
  if (absl::Status s = WritePlantedInstance(*inst, flags.out); !s.ok()) {
    return s;
  }
  std::cout << absl::StrFormat(
      "n=%d m=%d clusters=%d flips=%d planted_cost=%d\n", n,
      inst->graph.num_edges(), inst->planted.num_clusters(), inst->flips,
      PlantedCost(*inst));
  return absl::OkStatus();
}

absl::Status Run(const GlobalFlags& flags, const std::string& algo_name,
                 const std::string& graph_path, const std::string& log_path) {
  std::optional<Algorithm> algo = ParseAlgorithm(algo_name);
  if (!algo || *algo == Algorithm::kPlanted) {
    return absl::InvalidArgumentError("unknown --algo: " + algo_name);
  }
  absl::StatusOr<Graph> g = ReadEdgeListFile(graph_path);
  if (!g.ok()) return g.status();
  const Graph original = *g;

  std::ofstream log;
  RunOptions options;
  if (!log_path.empty()) {
    log.open(log_path);
    if (!log) return absl::UnavailableError("cannot write " + log_path);
    options.event_log = &log;
  }
  Rng rng(flags.seed);
  absl::StatusOr<ClusteringRun> run;
  switch (*algo) {
    case Algorithm::kPivot:
      run = RunPivotBaseline(*g, rng, options);
      break;
    case Algorithm::kAtom:
      run = RunAtomOnly(*g, flags.Goodness(), rng, options);
      break;
    default:
      run = RunAtomPivot(*g, flags.Goodness(), rng, options);
      break;
  }
  if (!run.ok()) return run.status();

  absl::StatusOr<int64_t> cost = ClusteringCost(original, run->clustering);
  if (!cost.ok()) return cost.status();
  const RunSummary& s = run->summary;
  std::cout << absl::StrFormat(
      "algo=%s cost=%d clusters=%d steps=%d atom_steps=%d pivot_steps=%d "
      "singleton_steps=%d wall_ms=%.3f\n",
      AlgorithmName(*algo), *cost, run->clustering.num_clusters(), s.steps,
      s.atom_steps, s.pivot_steps, s.singleton_steps, s.wall_ms);
  if (*algo != Algorithm::kPivot) {
    std::cout << absl::StrFormat(
        "copies=%d pops=%d checks=%d checks_passed=%d reports=%d "
        "check_draws=%.6g\n",
        s.finder.copies_enqueued, s.finder.pops, s.finder.checks,
        s.finder.checks_passed, s.finder.reports, s.finder.check_draws);
  }
  if (!flags.out.empty()) {
    return WriteClusteringFile(run->clustering, flags.out);
  }
  return absl::OkStatus();
}

absl::Status Cost(const std::string& graph_path,
                  const std::string& clustering_path) {
  absl::StatusOr<Graph> g = ReadEdgeListFile(graph_path);
  if (!g.ok()) return g.status();
  absl::StatusOr<Clustering> c =
      ReadClusteringFile(clustering_path, g->initial_vertex_count());
  if (!c.ok()) return c.status();
  absl::StatusOr<int64_t> cost = ClusteringCost(*g, *c);
  if (!cost.ok()) return cost.status();
  std::cout << absl::StrFormat("cost=%d clusters=%d\n", *cost,
                               c->num_clusters());
  return absl::OkStatus();
}

absl::Status Oracle(const GlobalFlags& flags, const std::string& graph_path,
                    bool pivot_expectation) {
  absl::StatusOr<Graph> g = ReadEdgeListFile(graph_path);
  if (!g.ok()) return g.status();
  absl::StatusOr<OptResult> opt = ExactOpt(*g);
  if (!opt.ok()) return opt.status();
  std::cout << absl::StrFormat("opt=%d clusters=%d\n", opt->cost,
                               opt->clustering.num_clusters());
  if (pivot_expectation) {
    absl::StatusOr<Rational> e = ExactPivotExpectation(*g);
    if (!e.ok()) return e.status();
    std::cout << absl::StrFormat("pivot_expectation=%s (%.6f)\n",
                                 e->ToString(), e->ToDouble());
  }
  if (!flags.out.empty()) {
    return WriteClusteringFile(opt->clustering, flags.out);
  }
  return absl::OkStatus();
}

struct SweepFlags {
  int64_t n = 1000;
  int64_t k = 10;
  int points = 200;
  double eps_min = 1e-4;
  double eps_max = 0.5;
  int repeats = 1;
  int threads = 1;
  bool no_timing = false;
  int window = 11;
  std::string plot;
  std::string series;
};

absl::Status WriteOutputs(const std::vector<SweepRecord>& records, int window,
                          const std::string& plot, const std::string& series) {
  if (plot.empty() && series.empty()) return absl::OkStatus();
  absl::StatusOr<SeriesMap> smoothed = BuildSeries(records, window);
  if (!smoothed.ok()) return smoothed.status();
  if (!series.empty()) {
    std::ofstream out(series);
    if (!out) return absl::UnavailableError("cannot write " + series);
    out << FormatSeriesCsv(*smoothed);
  }
  if (!plot.empty()) return EmitPlot(records, *smoothed, plot);
  return absl::OkStatus();
}

absl::Status Sweep(const GlobalFlags& flags, const SweepFlags& sf) {
  if (absl::Status s = RequireOut(flags, "sweep"); !s.ok()) return s;
  SweepConfig cfg;
  cfg.n = sf.n;
  cfg.k = sf.k;
  cfg.eps_grid = LogSpacedGrid(sf.eps_min, sf.eps_max, sf.points);
  cfg.seeds.clear();
  for (int r = 0; r < sf.repeats; ++r) cfg.seeds.push_back(flags.seed + r);
  cfg.goodness = flags.Goodness();
  cfg.threads = sf.threads;
  cfg.record_timing = !sf.no_timing;
  absl::StatusOr<std::vector<SweepRecord>> records = RunSweep(cfg);
  if (!records.ok()) return records.status();
  if (absl::Status s = WriteSweepCsv(*records, flags.out); !s.ok()) return s;
  std::cout << absl::StrFormat("wrote %d records to %s\n", records->size(),
                               flags.out);
  return WriteOutputs(*records, sf.window, sf.plot, sf.series);
}

absl::Status Plot(const GlobalFlags& flags, const std::string& csv,
                  int window, const std::string& series) {
  if (absl::Status s = RequireOut(flags, "plot"); !s.ok()) return s;
  absl::StatusOr<std::vector<SweepRecord>> records = ReadSweepCsv(csv);
  if (!records.ok()) return records.status();
  return WriteOutputs(*records, window, flags.out, series);
}

int Main(int argc, char** argv) {
  CLI::App app{"Correlation clustering with atom finding and pivoting"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Master random seed");
  app.add_option("--eps", flags.eps, "Goodness eps of the clusters sought")
      ->capture_default_str();
  app.add_option("--delta", flags.delta, "Degree slack (default eps/100)");
  app.add_option("--gamma", flags.gamma, "Sampling slack (default eps/100)");
  app.add_option("--out", flags.out, "Output path");

  int64_t gen_n = 1000, gen_k = 10;
  double gen_noise = 0.01;
  CLI::App* gen = app.add_subcommand("gen", "Generate a planted instance");
  gen->add_option("--n", gen_n, "Vertices")->capture_default_str();
  gen->add_option("--k", gen_k, "Planted clusters")->capture_default_str();
  gen->add_option("--noise", gen_noise, "Pair flip probability")
      ->capture_default_str();

  std::string algo = "atom-pivot", graph_path, log_path;
  CLI::App* run = app.add_subcommand("run", "Cluster an edge-list graph");
  run->add_option("--algo", algo, "pivot | atom | atom-pivot")
      ->check(CLI::IsMember({"pivot", "atom", "atom-pivot", "atom_pivot"}))
      ->capture_default_str();
  run->add_option("--graph", graph_path, "Edge-list file")->required();
  run->add_option("--log", log_path, "Write finder events here");

  std::string clustering_path;
  CLI::App* cost = app.add_subcommand("cost", "Disagreements of a clustering");
  cost->add_option("--graph", graph_path, "Edge-list file")->required();
  cost->add_option("--clustering", clustering_path, "Clustering file")
      ->required();

  bool pivot_expectation = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exact optimum (and pivot expectation) of a small graph");
  oracle->add_option("--graph", graph_path, "Edge-list file")->required();
  oracle->add_flag("--pivot", pivot_expectation,
                   "Also print the exact expected pivot cost");

  SweepFlags sf;
  CLI::App* sweep = app.add_subcommand("sweep", "Noise sweep to CSV");
  sweep->add_option("--n", sf.n, "Vertices")->capture_default_str();
  sweep->add_option("--k", sf.k, "Planted clusters")->capture_default_str();
  sweep->add_option("--points", sf.points, "Log-spaced eps points")
      ->capture_default_str();
  sweep->add_option("--eps-min", sf.eps_min)->capture_default_str();
  sweep->add_option("--eps-max", sf.eps_max)->capture_default_str();
  sweep->add_option("--repeats", sf.repeats, "Seeds per point, from --seed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--threads", sf.threads)->capture_default_str();
  sweep->add_flag("--no-timing", sf.no_timing,
                  "Write wall_ms as 0 for byte-stable output");
  sweep->add_option("--window", sf.window, "Smoothing window (odd)")
      ->capture_default_str();
  sweep->add_option("--plot", sf.plot, "Also write an SVG plot here");
  sweep->add_option("--series", sf.series, "Also write smoothed series CSV");

  std::string plot_csv, plot_series;
  int plot_window = 11;
  CLI::App* plot = app.add_subcommand("plot", "SVG plot from a sweep CSV");
  plot->add_option("--csv", plot_csv, "Sweep CSV")->required();
  plot->add_option("--window", plot_window, "Smoothing window (odd)")
      ->capture_default_str();
  plot->add_option("--series", plot_series, "Also write smoothed series CSV");

  CLI11_PARSE(app, argc, argv);

  if (*gen) return Guard([&] { return Gen(flags, gen_n, gen_k, gen_noise); });
  if (*run) return Guard([&] { return Run(flags, algo, graph_path, log_path); });
  if (*cost) return Guard([&] { return Cost(graph_path, clustering_path); });
  if (*oracle) {
    return Guard([&] { return Oracle(flags, graph_path, pivot_expectation); });
  }
  if (*sweep) return Guard([&] { return Sweep(flags, sf); });
  if (*plot) {
    return Guard([&] { return Plot(flags, plot_csv, plot_window, plot_series); });
  }
  return 0;
}

}  // namespace
}  // namespace atompivot

int main(int argc, char** argv) {
  try {
    return atompivot::Main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 2;
  }
}
