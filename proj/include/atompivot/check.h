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

#ifndef ATOMPIVOT_CHECK_H_
#define ATOMPIVOT_CHECK_H_

#include <cstdint>
#include <vector>

#include "atompivot/goodness.h"
#include "atompivot/graph.h"
#include "atompivot/random.h"

namespace atompivot {

// Sample counts of one Check call on a vertex of closed degree d:
//   eta  = ceil(16 / (beta gamma^2) * ln d)          outer samples
//   eta' = ceil(8 / (alpha gamma^2) * ln(2 / (beta gamma)))   inner samples
struct CheckBudget {
  uint64_t eta = 0;
  uint64_t eta_prime = 0;

  // Total neighborhood samples drawn by one literal Check call.
  double draws() const {
    return static_cast<double>(eta) * (1.0 + static_cast<double>(eta_prime));
  }
};

CheckBudget ComputeCheckBudget(int64_t degree, const CleanParams& p,
                               double gamma);

// Check estimates whether Clean(N(v)) would succeed. For each of eta samples
// u from N(v) it draws eta' samples w from N(v) and counts k' = #{w not in
// N(u)}; u is counted as bad when
//   k' > (1 + alpha(1 - gamma) - d(u)/d(v)) eta' / 2.
// Check returns false iff more than beta(1 - gamma) eta samples were bad.
// All samples are uniform with replacement.

// The procedure exactly as described, one draw at a time.
bool SampledCheck(const Graph& g, VertexId v, const CleanParams& p, double gamma,
                  Rng& rng);

// Draws from the same output distribution as SampledCheck without drawing
// the individual samples. Given u, k' is Binomial(eta', q_u) with
// q_u = |N(v) \ N(u)| / d(v), so each outer sample is bad independently with
// probability P_u = P[k' > t_u], averaged over u; the number of bad outer
// samples is Binomial(eta, mean P_u). Check returns true with probability
//   F(mean P_u) = P[Binomial(eta, mean P_u) <= floor(beta(1 - gamma) eta)].
//
// Members of N(v) are evaluated lazily. Sample() draws U ~ [0,1) first and
// evaluates only as many members as needed to decide U < F(mean P_u), using
// that F is decreasing. Tail probabilities far from the threshold are kept as
// Hoeffding intervals and made exact only when U falls inside the resulting
// uncertainty window.
//
// The object snapshots N(v) and stays valid while neither N(v) nor N(u) for
// any u in N(v) changes.
class CheckDistribution {
 public:
  CheckDistribution(const Graph& g, VertexId v, const CleanParams& p,
                    double gamma);

  bool Sample(const Graph& g, Rng& rng);

  // P[Check returns true], evaluating every member.
  double AcceptProbability(const Graph& g);

  // Current bracket on P[Check returns true].
  double accept_lower() const { return accept_lo_; }
  double accept_upper() const { return accept_hi_; }

  // Evaluates members until the acceptance probability is known to be zero,
  // or exactly. Returns the upper end of the bracket afterwards.
  double ResolveZeroOrExact(const Graph& g);

  VertexId vertex() const { return vertex_; }
  const CheckBudget& budget() const { return budget_; }
  // Membership probes spent on neighborhood intersections so far.
  int64_t probes() const { return probes_; }

 private:
  struct LooseTerm {
    double q;
    double cutoff;
    double lo;
    double hi;
  };

  bool fully_evaluated() const { return next_ == members_.size(); }
  void EvaluateNext(const Graph& g, size_t count);
  void TightenAll();
  void UpdateBracket();

  VertexId vertex_;
  CleanParams params_;
  double gamma_;
  CheckBudget budget_;
  double accept_cutoff_;
  std::vector<VertexId> members_;
  size_t next_ = 0;
  size_t chunk_ = 8;
  double sum_lo_ = 0;
  double sum_hi_ = 0;
  std::vector<LooseTerm> loose_;
  double accept_lo_ = 0;
  double accept_hi_ = 1;
  int64_t probes_ = 0;
};

// Check with the cheaper of the two equivalent routes: the literal sampler
// when its draw count is at most d(v)^2, otherwise CheckDistribution.
bool Check(const Graph& g, VertexId v, const CleanParams& p, double gamma,
           Rng& rng);

// P[Binomial(trials, p) <= k]. Exposed for tests.
double BinomialCdf(double trials, double p, double k);

}  // namespace atompivot

#endif  // ATOMPIVOT_CHECK_H_
