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

#ifndef ATOMPIVOT_SMOOTHING_H_
#define ATOMPIVOT_SMOOTHING_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace atompivot {

// Costs of zero are replaced by this before taking logarithms.
inline constexpr double kZeroCostFloor = 0.5;

// Sliding geometric mean: l_i = exp(mean of ln c_r over r in [i-h, i+h]),
// with h = window / 2 reduced near the ends so the window stays centered on
// i. Fails on empty input, an even or non-positive window, or negative costs.
absl::StatusOr<std::vector<double>> SmoothLogSpace(std::span<const double> costs,
                                                   int window);

}  // namespace atompivot

#endif  // ATOMPIVOT_SMOOTHING_H_
