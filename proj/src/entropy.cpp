// Copyright 2026 The ethent Authors
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

#include "ethent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ethent/error.hpp"

namespace ethent {

namespace {

constexpr double kRenormalizeTolerance = 1e-9;
constexpr double kRateConservationTolerance = 1e-10;

}  // namespace

GoalDistribution::GoalDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw InvalidArgument("goal distribution needs at least 2 goals, got " +
                          std::to_string(probs_.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidArgument("probability " + std::to_string(i) +
                            " is negative or non-finite");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRenormalizeTolerance) {
    throw InvalidArgument("probabilities sum to " + std::to_string(sum) +
                          ", not 1");
  }
  if (sum != 1.0) {
    for (double& p : probs_) p /= sum;
  }
}

GoalDistribution GoalDistribution::uniform(std::size_t n) {
  if (n < 2) throw InvalidArgument("uniform distribution needs n >= 2");
  return GoalDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

GoalDistribution GoalDistribution::one_hot(std::size_t n, std::size_t index) {
  if (index >= n) throw InvalidArgument("one-hot index out of range");
  std::vector<double> probs(n, 0.0);
  probs[index] = 1.0;
  return GoalDistribution(std::move(probs));
}

void AlignmentEnergyParams::validate() const {
  if (!(k0 > 0.0)) throw InvalidArgument("k0 must be > 0");
  if (!(t_e > 0.0)) throw InvalidArgument("t_e must be > 0");
}

double shannon_entropy(const GoalDistribution& dist) {
  double s = 0.0;
  for (double p : dist.probs()) {
    if (p > 0.0) s -= p * std::log(p);
  }
  // Rounding can push a near-degenerate sum a hair below zero.
  return std::max(s, 0.0);
}

double max_entropy(std::size_t n) {
  if (n < 2) throw InvalidArgument("max_entropy needs n >= 2");
  return std::log(static_cast<double>(n));
}

double kl_divergence(const GoalDistribution& p, const GoalDistribution& q) {
  if (p.size() != q.size()) {
    throw InvalidArgument("kl_divergence: length mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      throw InfiniteDivergence("kl_divergence: p has mass at goal " +
                               std::to_string(i) + " where q is zero");
    }
    d += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(d, 0.0);
}

double alignment_energy(double s, const AlignmentEnergyParams& params) {
  params.validate();
  if (!(s >= 0.0)) throw InvalidArgument("alignment_energy: s must be >= 0");
  return -params.k0 * params.t_e * s;
}

double entropy_rate_chain_rule(const GoalDistribution& dist,
                               std::span<const double> dp_dt) {
  if (dp_dt.size() != dist.size()) {
    throw InvalidArgument("entropy_rate_chain_rule: length mismatch");
  }
  const double total = std::accumulate(dp_dt.begin(), dp_dt.end(), 0.0);
  if (std::abs(total) > kRateConservationTolerance) {
    throw InvalidArgument("entropy_rate_chain_rule: rates sum to " +
                          std::to_string(total) + ", probability not conserved");
  }
  double rate = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dp_dt[i] == 0.0) continue;
    if (dist[i] == 0.0) {
      throw InvalidArgument(
          "entropy_rate_chain_rule: nonzero rate at zero probability (goal " +
          std::to_string(i) + ")");
    }
    rate -= (std::log(dist[i]) + 1.0) * dp_dt[i];
  }
  return rate;
}

}  // namespace ethent
