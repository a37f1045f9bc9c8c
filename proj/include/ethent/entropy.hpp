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

#pragma once

/**
 * @file entropy.hpp
 * @brief Goal distributions and the information-theoretic quantities built on
 * them: ethical entropy, KL divergence, alignment energy, and the chain-rule
 * entropy rate.
 *
 * All entropies are in nats.
 */

#include <cstddef>
#include <span>
#include <vector>

namespace ethent {

/// Probability vector over n >= 2 goals. Immutable once constructed.
class GoalDistribution {
 public:
  /// Sums within 1e-9 of one are renormalized; anything further off, any
  /// negative or non-finite entry, or fewer than two goals throws
  /// InvalidArgument.
  explicit GoalDistribution(std::vector<double> probs);

  static GoalDistribution uniform(std::size_t n);
  static GoalDistribution one_hot(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

  friend bool operator==(const GoalDistribution&,
                         const GoalDistribution&) = default;

 private:
  std::vector<double> probs_;
};

struct AlignmentEnergyParams {
  double k0 = 1.0;   // energy per nat
  double t_e = 1.0;  // effective temperature, supplied directly

  void validate() const;
};

/// -sum p ln p with 0 ln 0 = 0.
double shannon_entropy(const GoalDistribution& dist);

/// ln n; the entropy of complete value decoherence over n goals.
double max_entropy(std::size_t n);

/// sum p ln(p/q). Throws InfiniteDivergence when p has mass outside the
/// support of q.
double kl_divergence(const GoalDistribution& p, const GoalDistribution& q);

/// E_a = -k0 * t_e * s.
double alignment_energy(double s, const AlignmentEnergyParams& params);

/// dS/dt = -sum (ln p_i + 1) dp_i/dt.
///
/// The rate vector must conserve probability (|sum| <= 1e-10), and a zero
/// probability may not carry a nonzero rate since the log term diverges there.
double entropy_rate_chain_rule(const GoalDistribution& dist,
                               std::span<const double> dp_dt);

}  // namespace ethent
