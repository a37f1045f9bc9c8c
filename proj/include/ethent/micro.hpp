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
 * @file micro.hpp
 * @brief Softmax goal agent trained by noisy SGD on a proxy cross-entropy.
 *
 * The agent's goal distribution is softmax(theta). One step is
 *
 *   theta' = theta - eta * (softmax(theta) - q)
 *                  + sigma_eps * z
 *                  - align_strength * eta * (softmax(theta) - e_intended)
 *
 * where q is the proxy target, z is a vector of standard normals, and the
 * last term is the gradient of -ln p(intended goal), i.e. alignment work.
 * `align_strength` is a gradient gain; it is not in the macro model's
 * nats-per-time units.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ethent/entropy.hpp"

namespace ethent {

struct MicroConfig {
  std::size_t n_goals = 8;
  std::vector<double> theta0;
  GoalDistribution proxy_dist = GoalDistribution::uniform(8);
  std::size_t intended_goal = 0;
  double eta = 0.1;
  double sigma_eps = 0.1;
  double align_strength = 0.0;
  std::size_t steps = 10000;
  std::uint64_t seed = 0;

  void validate() const;
};

struct MicroTrajectory {
  std::vector<double> s_values;  // steps + 1 entries, initial state first
  GoalDistribution final_dist = GoalDistribution::uniform(2);

  /// Header `step,s`.
  std::string to_csv() const;
};

struct SecondLawReport {
  double fraction_increased = 0.0;
  double mean_delta_s = 0.0;
  double sign_test_p = 1.0;
  std::vector<double> deltas;
};

/// Max-shifted softmax; valid for any finite logits.
GoalDistribution softmax(std::span<const double> logits);

/// Gradient of the cross-entropy -sum q ln softmax(theta): softmax(theta) - q.
std::vector<double> proxy_loss_grad(std::span<const double> theta,
                                    const GoalDistribution& proxy_dist);

/// d softmax(theta) along direction `dtheta` (Jacobian-vector product).
std::vector<double> softmax_pushforward(std::span<const double> theta,
                                        std::span<const double> dtheta);

std::vector<double> sgd_step(std::span<const double> theta,
                             const MicroConfig& config,
                             std::span<const double> gaussian_draws);

MicroTrajectory run_micro(const MicroConfig& config);

/// Runs `n_seeds` trials on substreams of config.seed and tests whether the
/// entropy rose. Requires align_strength = 0 and S(theta0) < ln n - 0.1.
SecondLawReport second_law_check(const MicroConfig& config, std::size_t n_seeds,
                                 unsigned threads = 0);

/// Logits (a, 0, ..., 0) whose softmax has the requested entropy, with
/// a >= 0. Target must lie in (0, ln n].
std::vector<double> concentrated_logits(std::size_t n, double target_entropy);

}  // namespace ethent
