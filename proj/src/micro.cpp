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

#include "ethent/micro.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ethent/error.hpp"
#include "ethent/format.hpp"
#include "ethent/rng.hpp"
#include "ethent/stats.hpp"
#include "parallel.hpp"

namespace ethent {

void MicroConfig::validate() const {
  if (n_goals < 2) throw InvalidArgument("n_goals: must be >= 2");
  if (theta0.size() != n_goals) {
    throw InvalidArgument("theta0: length must equal n_goals");
  }
  for (double t : theta0) {
    if (!std::isfinite(t)) throw InvalidArgument("theta0: logits must be finite");
  }
  if (proxy_dist.size() != n_goals) {
    throw InvalidArgument("proxy_dist: length must equal n_goals");
  }
  if (intended_goal >= n_goals) {
    throw InvalidArgument("intended_goal: must be < n_goals");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidArgument("eta: must be > 0");
  if (!(sigma_eps >= 0.0) || !std::isfinite(sigma_eps)) {
    throw InvalidArgument("sigma_eps: must be >= 0");
  }
  if (!(align_strength >= 0.0) || !std::isfinite(align_strength)) {
    throw InvalidArgument("align_strength: must be >= 0");
  }
}

GoalDistribution softmax(std::span<const double> logits) {
  if (logits.size() < 2) throw InvalidArgument("softmax: need at least 2 logits");
  const double top = *std::max_element(logits.begin(), logits.end());
  if (!std::isfinite(top)) throw InvalidArgument("softmax: non-finite logit");
  std::vector<double> p(logits.size());
  double z = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (!std::isfinite(logits[i])) throw InvalidArgument("softmax: non-finite logit");
    p[i] = std::exp(logits[i] - top);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return GoalDistribution(std::move(p));
}

std::vector<double> proxy_loss_grad(std::span<const double> theta,
                                    const GoalDistribution& proxy_dist) {
  if (theta.size() != proxy_dist.size()) {
    throw InvalidArgument("proxy_loss_grad: dimension mismatch");
  }
  const GoalDistribution p = softmax(theta);
  std::vector<double> grad(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) grad[i] = p[i] - proxy_dist[i];
  return grad;
}

std::vector<double> softmax_pushforward(std::span<const double> theta,
                                        std::span<const double> dtheta) {
  if (theta.size() != dtheta.size()) {
    throw InvalidArgument("softmax_pushforward: dimension mismatch");
  }
  const GoalDistribution p = softmax(theta);
  double mean_dir = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) mean_dir += p[i] * dtheta[i];
  std::vector<double> dp(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    dp[i] = p[i] * (dtheta[i] - mean_dir);
  }
  return dp;
}

namespace {

std::vector<double> sgd_step_unchecked(std::span<const double> theta,
                                       const MicroConfig& config,
                                       std::span<const double> draws) {
  const GoalDistribution p = softmax(theta);
  std::vector<double> next(theta.begin(), theta.end());
  for (std::size_t i = 0; i < next.size(); ++i) {
    const double proxy_grad = p[i] - config.proxy_dist[i];
    const double align_grad = p[i] - (i == config.intended_goal ? 1.0 : 0.0);
    next[i] += -config.eta * proxy_grad + config.sigma_eps * draws[i] -
               config.align_strength * config.eta * align_grad;
  }
  return next;
}

MicroTrajectory run_micro_unchecked(const MicroConfig& config, std::uint64_t seed) {
  GaussianStream rng(seed);
  MicroTrajectory traj;
  traj.s_values.reserve(config.steps + 1);
  std::vector<double> theta = config.theta0;
  std::vector<double> draws(config.n_goals);
  traj.s_values.push_back(shannon_entropy(softmax(theta)));
  for (std::size_t k = 0; k < config.steps; ++k) {
    for (double& z : draws) z = rng.normal();
    theta = sgd_step_unchecked(theta, config, draws);
    traj.s_values.push_back(shannon_entropy(softmax(theta)));
  }
  traj.final_dist = softmax(theta);
  return traj;
}

}  // namespace

std::vector<double> sgd_step(std::span<const double> theta,
                             const MicroConfig& config,
                             std::span<const double> gaussian_draws) {
  if (theta.size() != config.n_goals || gaussian_draws.size() != config.n_goals ||
      config.proxy_dist.size() != config.n_goals) {
    throw InvalidArgument("sgd_step: dimension mismatch");
  }
  return sgd_step_unchecked(theta, config, gaussian_draws);
}

MicroTrajectory run_micro(const MicroConfig& config) {
  config.validate();
  return run_micro_unchecked(config, config.seed);
}

SecondLawReport second_law_check(const MicroConfig& config, std::size_t n_seeds,
                                 unsigned threads) {
  config.validate();
  if (config.align_strength != 0.0) {
    throw InvalidArgument("second_law_check: align_strength must be 0");
  }
  if (n_seeds == 0) throw InvalidArgument("second_law_check: n_seeds must be >= 1");
  const double s_initial = shannon_entropy(softmax(config.theta0));
  if (!(s_initial < max_entropy(config.n_goals) - 0.1)) {
    throw InvalidArgument(
        "second_law_check: initial entropy leaves no room to grow (needs S0 < ln n - 0.1)");
  }

  SecondLawReport report;
  report.deltas.resize(n_seeds);
  detail::parallel_for(n_seeds, threads, [&](std::size_t i) {
    const MicroTrajectory traj =
        run_micro_unchecked(config, substream_seed(config.seed, i));
    report.deltas[i] = traj.s_values.back() - s_initial;
  });

  const auto increased = std::count_if(report.deltas.begin(), report.deltas.end(),
                                       [](double d) { return d > 0.0; });
  report.fraction_increased =
      static_cast<double>(increased) / static_cast<double>(n_seeds);
  report.mean_delta_s = mean_std(report.deltas).mean;
  const bool all_zero = std::all_of(report.deltas.begin(), report.deltas.end(),
                                    [](double d) { return d == 0.0; });
  report.sign_test_p = all_zero ? 1.0 : sign_test(report.deltas);
  return report;
}

std::vector<double> concentrated_logits(std::size_t n, double target_entropy) {
  const double ceiling = max_entropy(n);
  if (!(target_entropy > 0.0 && target_entropy <= ceiling)) {
    throw InvalidArgument("concentrated_logits: target outside (0, ln n]");
  }
  std::vector<double> theta(n, 0.0);
  // Entropy of softmax(a, 0, ..., 0) decreases monotonically in a >= 0.
  double lo = 0.0;
  double hi = 1.0;
  auto entropy_at = [&](double a) {
    theta[0] = a;
    return shannon_entropy(softmax(theta));
  };
  while (entropy_at(hi) > target_entropy) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (entropy_at(mid) > target_entropy ? lo : hi) = mid;
  }
  theta[0] = 0.5 * (lo + hi);
  return theta;
}

std::string MicroTrajectory::to_csv() const {
  std::string out = "step,s\n";
  for (std::size_t k = 0; k < s_values.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(s_values[k]);
    out += '\n';
  }
  return out;
}

}  // namespace ethent
