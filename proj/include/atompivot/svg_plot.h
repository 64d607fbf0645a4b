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

#ifndef ATOMPIVOT_SVG_PLOT_H_
#define ATOMPIVOT_SVG_PLOT_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "atompivot/sweep.h"

namespace atompivot {

// Standalone SVG with log-scaled axes: noise eps on x, cost on y. Each
// algorithm gets one polyline through its smoothed series, markers at its
// raw mean costs and a legend entry. Points with eps <= 0 cannot be placed on
// a log axis and are left out.
std::string RenderCostPlot(const SeriesMap& series);

// Renders the series and writes them to `path`. Fails on empty records.
absl::Status EmitPlot(const std::vector<SweepRecord>& records,
                      const SeriesMap& smoothed, const std::string& path);

}  // namespace atompivot

#endif  // ATOMPIVOT_SVG_PLOT_H_
