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

#ifndef ATOMPIVOT_ORACLE_H_
#define ATOMPIVOT_ORACLE_H_

#include <compare>
#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "atompivot/graph.h"

namespace atompivot {

// Exact non-negative rational, always reduced.
class Rational {
 public:
  Rational(int64_t num = 0, int64_t den = 1);
  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  int64_t num_;
  int64_t den_;
};

inline constexpr int64_t kMaxExactOptVertices = 12;
inline constexpr int64_t kMaxPivotExpectationVertices = 14;

struct OptResult {
  Clustering clustering;
  int64_t cost = 0;
};

// Minimum-disagreement clustering of the live vertices by exhaustive
// set-partition search (restricted growth strings with branch and bound).
absl::StatusOr<OptResult> ExactOpt(const Graph& g);

// Expected cost of the pivot algorithm on the live vertices, exactly, by
// dynamic programming over vertex subsets.
absl::StatusOr<Rational> ExactPivotExpectation(const Graph& g);

}  // namespace atompivot

#endif  // ATOMPIVOT_ORACLE_H_
