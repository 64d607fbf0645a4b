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

#include "atompivot/smoothing.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace atompivot {

absl::StatusOr<std::vector<double>> SmoothLogSpace(std::span<const double> costs,
                                                   int window) {
  if (costs.empty()) return absl::InvalidArgumentError("smoothing: no costs");
  if (window < 1 || window % 2 == 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("smoothing: window %d must be odd and positive", window));
  }
  std::vector<double> logs(costs.size());
  for (size_t i = 0; i < costs.size(); ++i) {
    if (!(costs[i] >= 0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("smoothing: negative cost %g", costs[i]));
    }
    logs[i] = std::log(costs[i] == 0 ? kZeroCostFloor : costs[i]);
  }
  const int64_t n = static_cast<int64_t>(costs.size());
  const int64_t half = window / 2;
  std::vector<double> out(costs.size());
  for (int64_t i = 0; i < n; ++i) {
    const int64_t h = std::min({half, i, n - 1 - i});
    double sum = 0;
    for (int64_t r = i - h; r <= i + h; ++r) sum += logs[r];
    out[i] = std::exp(sum / static_cast<double>(2 * h + 1));
  }
  return out;
}

}  // namespace atompivot
