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

#include "atompivot/check.h"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/binomial.hpp>

#include "atompivot/check_macros.h"

namespace atompivot {
namespace {

// Hoeffding tails below this are carried as intervals instead of evaluated.
constexpr double kLooseTail = 1e-12;

double InnerCutoff(int64_t du, int64_t dv, const CleanParams& p, double gamma,
                   uint64_t eta_prime) {
  return 0.5 *
         (1 + p.alpha * (1 - gamma) -
          static_cast<double>(du) / static_cast<double>(dv)) *
         static_cast<double>(eta_prime);
}

double OuterCutoff(const CleanParams& p, double gamma, uint64_t eta) {
  return p.beta * (1 - gamma) * static_cast<double>(eta);
}

// P[Binomial(trials, p) > x] for real x.
double BinomialUpperTail(double trials, double p, double x) {
  if (x < 0) return 1;
  const double c = std::floor(x);
  if (c >= trials || p <= 0) return 0;
  if (p >= 1) return 1;
  boost::math::binomial_distribution<double> dist(trials, p);
  return boost::math::cdf(boost::math::complement(dist, c));
}

}  // namespace

double BinomialCdf(double trials, double p, double k) {
  if (k < 0) return 0;
  const double c = std::floor(k);
  if (c >= trials || p <= 0) return 1;
  if (p >= 1) return 0;
  boost::math::binomial_distribution<double> dist(trials, p);
  return boost::math::cdf(dist, c);
}

CheckBudget ComputeCheckBudget(int64_t degree, const CleanParams& p,
                               double gamma) {
  AP_CHECK(degree >= 1, "ComputeCheckBudget: degree < 1");
  AP_CHECK(p.alpha > 0 && p.beta > 0 && gamma > 0,
           "ComputeCheckBudget: alpha, beta, gamma must be positive");
  const double g2 = gamma * gamma;
  const double eta =
      std::ceil(16 / (p.beta * g2) * std::log(static_cast<double>(degree)));
  const double eta_prime =
      std::ceil(8 / (p.alpha * g2) * std::log(2 / (p.beta * gamma)));
  AP_CHECK(eta < 9e18 && eta_prime < 9e18, "ComputeCheckBudget: overflow");
  return {static_cast<uint64_t>(std::max(eta, 0.0)),
          static_cast<uint64_t>(std::max(eta_prime, 0.0))};
}

bool SampledCheck(const Graph& g, VertexId v, const CleanParams& p, double gamma,
                  Rng& rng) {
  AP_CHECK(g.IsLive(v), "Check: dead vertex");
  const int64_t dv = g.Degree(v);
  const CheckBudget budget = ComputeCheckBudget(dv, p, gamma);
  const std::vector<VertexId> members(g.Neighborhood(v).begin(),
                                      g.Neighborhood(v).end());
  uint64_t k = 0;
  for (uint64_t i = 0; i < budget.eta; ++i) {
    const VertexId u = members[UniformIndex(rng, members.size())];
    const VertexSet& nu = g.Neighborhood(u);
    uint64_t k_inner = 0;
    for (uint64_t j = 0; j < budget.eta_prime; ++j) {
      const VertexId w = members[UniformIndex(rng, members.size())];
      if (!nu.contains(w)) ++k_inner;
    }
    if (static_cast<double>(k_inner) >
        InnerCutoff(g.Degree(u), dv, p, gamma, budget.eta_prime)) {
      ++k;
    }
  }
  return !(static_cast<double>(k) > OuterCutoff(p, gamma, budget.eta));
}

CheckDistribution::CheckDistribution(const Graph& g, VertexId v,
                                     const CleanParams& p, double gamma)
    : vertex_(v), params_(p), gamma_(gamma) {
  AP_CHECK(g.IsLive(v), "Check: dead vertex");
  budget_ = ComputeCheckBudget(g.Degree(v), p, gamma);
  accept_cutoff_ = OuterCutoff(p, gamma, budget_.eta);
  members_.assign(g.Neighborhood(v).begin(), g.Neighborhood(v).end());
  std::sort(members_.begin(), members_.end());
  UpdateBracket();
}

void CheckDistribution::EvaluateNext(const Graph& g, size_t count) {
  const VertexSet& nv = g.Neighborhood(vertex_);
  const int64_t dv = static_cast<int64_t>(members_.size());
  const double trials = static_cast<double>(budget_.eta_prime);
  const size_t end = std::min(members_.size(), next_ + count);
  for (; next_ < end; ++next_) {
    const VertexId u = members_[next_];
    const VertexSet& nu = g.Neighborhood(u);
    const VertexSet& small = nu.size() <= nv.size() ? nu : nv;
    const VertexSet& large = nu.size() <= nv.size() ? nv : nu;
    int64_t common = 0;
    for (VertexId w : small) common += large.contains(w);
    probes_ += static_cast<int64_t>(small.size());

    const double q = static_cast<double>(dv - common) / static_cast<double>(dv);
    const double x = InnerCutoff(static_cast<int64_t>(nu.size()), dv, params_,
                                 gamma_, budget_.eta_prime);
    double lo, hi;
    if (x < 0) {
      lo = hi = 1;
    } else {
      const double c = std::floor(x);
      const double mean = q * trials;
      double tail = 1;
      if (c + 1 > mean) {
        tail = std::exp(-2 * (c + 1 - mean) * (c + 1 - mean) / trials);
      } else if (c < mean) {
        tail = std::exp(-2 * (mean - c) * (mean - c) / trials);
      }
      if (tail <= kLooseTail && c + 1 > mean) {
        lo = 0;
        hi = tail;
        loose_.push_back({q, x, lo, hi});
      } else if (tail <= kLooseTail) {
        lo = 1 - tail;
        hi = 1;
        loose_.push_back({q, x, lo, hi});
      } else {
        lo = hi = BinomialUpperTail(trials, q, x);
      }
    }
    sum_lo_ += lo;
    sum_hi_ += hi;
  }
}

void CheckDistribution::TightenAll() {
  const double trials = static_cast<double>(budget_.eta_prime);
  for (const LooseTerm& term : loose_) {
    const double exact = BinomialUpperTail(trials, term.q, term.cutoff);
    sum_lo_ += exact - term.lo;
    sum_hi_ += exact - term.hi;
  }
  loose_.clear();
}

void CheckDistribution::UpdateBracket() {
  const double d = static_cast<double>(members_.size());
  const double eta = static_cast<double>(budget_.eta);
  const double remaining = static_cast<double>(members_.size() - next_);
  const double low = std::clamp(sum_lo_ / d, 0.0, 1.0);
  const double high = std::clamp((sum_hi_ + remaining) / d, 0.0, 1.0);
  accept_hi_ = BinomialCdf(eta, low, accept_cutoff_);
  accept_lo_ = fully_evaluated() && loose_.empty()
                   ? accept_hi_
                   : BinomialCdf(eta, high, accept_cutoff_);
}

bool CheckDistribution::Sample(const Graph& g, Rng& rng) {
  const double u = Uniform01(rng);
  while (true) {
    if (u < accept_lo_) return true;
    if (u >= accept_hi_) return false;
    if (!fully_evaluated()) {
      EvaluateNext(g, chunk_);
      chunk_ *= 2;
    } else if (!loose_.empty()) {
      TightenAll();
    } else {
      return u < accept_lo_;
    }
    UpdateBracket();
  }
}

double CheckDistribution::ResolveZeroOrExact(const Graph& g) {
  while (accept_hi_ > 0 && !fully_evaluated()) {
    EvaluateNext(g, chunk_);
    chunk_ *= 2;
    UpdateBracket();
  }
  if (accept_hi_ > 0 && !loose_.empty()) {
    TightenAll();
    UpdateBracket();
  }
  return accept_hi_;
}

double CheckDistribution::AcceptProbability(const Graph& g) {
  EvaluateNext(g, members_.size());
  TightenAll();
  UpdateBracket();
  return accept_lo_;
}

bool Check(const Graph& g, VertexId v, const CleanParams& p, double gamma,
           Rng& rng) {
  AP_CHECK(g.IsLive(v), "Check: dead vertex");
  const double d = static_cast<double>(g.Degree(v));
  if (ComputeCheckBudget(g.Degree(v), p, gamma).draws() <= d * d) {
    return SampledCheck(g, v, p, gamma, rng);
  }
  return CheckDistribution(g, v, p, gamma).Sample(g, rng);
}

}  // namespace atompivot
