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

#include "atompivot/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "absl/strings/str_format.h"
#include "atompivot/smoothing.h"

namespace atompivot {
namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 170, kTop = 30, kBottom = 60;

const char* ColorFor(Algorithm algo) {
  switch (algo) {
    case Algorithm::kPivot: return "#1f77b4";
    case Algorithm::kAtom: return "#ff7f0e";
    case Algorithm::kAtomPivot: return "#2ca02c";
    case Algorithm::kPlanted: return "#7f7f7f";
  }
  return "#000000";
}

struct LogRange {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Add(double value) {
    lo = std::min(lo, std::floor(std::log10(value)));
    hi = std::max(hi, std::ceil(std::log10(value)));
  }
  void Finish() {
    if (!(lo <= hi)) lo = 0, hi = 1;
    if (lo == hi) hi = lo + 1;
  }
  double Fraction(double value) const {
    return (std::log10(value) - lo) / (hi - lo);
  }
};

}  // namespace

std::string RenderCostPlot(const SeriesMap& series) {
  LogRange xr, yr;
  for (const auto& [algo, points] : series) {
    for (const SeriesPoint& p : points) {
      if (p.eps <= 0) continue;
      xr.Add(p.eps);
      yr.Add(std::max(p.smoothed, kZeroCostFloor));
      yr.Add(std::max(p.mean_cost, kZeroCostFloor));
    }
  }
  xr.Finish();
  yr.Finish();
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double eps) { return kLeft + xr.Fraction(eps) * pw; };
  auto py = [&](double cost) {
    return kTop + (1 - yr.Fraction(std::max(cost, kZeroCostFloor))) * ph;
  };

  std::string svg = absl::StrFormat(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
      "viewBox=\"0 0 %g %g\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect x=\"0\" y=\"0\" width=\"%g\" height=\"%g\" fill=\"white\"/>\n",
      kWidth, kHeight, kWidth, kHeight, kWidth, kHeight);
  absl::StrAppendFormat(&svg,
                        "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" "
                        "fill=\"none\" stroke=\"black\"/>\n",
                        kLeft, kTop, pw, ph);
  for (double e = xr.lo; e <= xr.hi; ++e) {
    const double x = px(std::pow(10.0, e));
    absl::StrAppendFormat(&svg,
                          "<line x1=\"%.2f\" y1=\"%g\" x2=\"%.2f\" y2=\"%g\" "
                          "stroke=\"#dddddd\"/>\n"
                          "<text x=\"%.2f\" y=\"%g\" text-anchor=\"middle\">"
                          "1e%g</text>\n",
                          x, kTop, x, kTop + ph, x, kTop + ph + 18, e);
  }
  for (double e = yr.lo; e <= yr.hi; ++e) {
    const double y = py(std::pow(10.0, e));
    absl::StrAppendFormat(&svg,
                          "<line x1=\"%g\" y1=\"%.2f\" x2=\"%g\" y2=\"%.2f\" "
                          "stroke=\"#dddddd\"/>\n"
                          "<text x=\"%g\" y=\"%.2f\" text-anchor=\"end\">"
                          "1e%g</text>\n",
                          kLeft, y, kLeft + pw, y, kLeft - 6, y + 4, e);
  }
  absl::StrAppendFormat(&svg,
                        "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">"
                        "noise eps</text>\n"
                        "<text x=\"18\" y=\"%g\" text-anchor=\"middle\" "
                        "transform=\"rotate(-90 18 %g)\">cost</text>\n",
                        kLeft + pw / 2, kHeight - 15, kTop + ph / 2,
                        kTop + ph / 2);

  int legend_row = 0;
  for (const auto& [algo, points] : series) {
    const char* color = ColorFor(algo);
    std::string coords;
    for (const SeriesPoint& p : points) {
      if (p.eps <= 0) continue;
      absl::StrAppendFormat(&coords, "%s%.2f,%.2f", coords.empty() ? "" : " ",
                            px(p.eps), py(p.smoothed));
      absl::StrAppendFormat(&svg,
                            "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.5\" "
                            "fill=\"%s\" fill-opacity=\"0.35\"/>\n",
                            px(p.eps), py(p.mean_cost), color);
    }
    absl::StrAppendFormat(&svg,
                          "<polyline fill=\"none\" stroke=\"%s\" "
                          "stroke-width=\"2\" points=\"%s\"/>\n",
                          color, coords);
    const double ly = kTop + 10 + 20 * legend_row++;
    absl::StrAppendFormat(&svg,
                          "<g class=\"legend\"><line x1=\"%g\" y1=\"%g\" "
                          "x2=\"%g\" y2=\"%g\" stroke=\"%s\" stroke-width=\"2\"/>"
                          "<text x=\"%g\" y=\"%g\">%s</text></g>\n",
                          kLeft + pw + 12, ly, kLeft + pw + 36, ly, color,
                          kLeft + pw + 42, ly + 4, AlgorithmName(algo));
  }
  svg += "</svg>\n";
  return svg;
}

absl::Status EmitPlot(const std::vector<SweepRecord>& records,
                      const SeriesMap& smoothed, const std::string& path) {
  if (records.empty()) return absl::InvalidArgumentError("plot: no records");
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError("cannot write " + path);
  out << RenderCostPlot(smoothed);
  return out ? absl::OkStatus() : absl::DataLossError("write failed: " + path);
}

}  // namespace atompivot
