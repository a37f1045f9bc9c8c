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

#include "ethent/macro.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ethent/error.hpp"
#include "ethent/format.hpp"
#include "ethent/rng.hpp"
#include "ethent/stats.hpp"
#include "parallel.hpp"

namespace ethent {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw InvalidArgument(std::string(field) + ": " + what);
}

}  // namespace

void MacroConfig::validate() const {
  require(std::isfinite(s_max) && s_max >= 0.0, "s_max", "must be finite and >= 0");
  require(std::isfinite(s0) && s0 >= 0.0 && s0 <= s_max, "s0",
          "must lie in [0, s_max]");
  require(std::isfinite(sigma_noise_rate) && sigma_noise_rate >= 0.0,
          "sigma_noise_rate", "must be >= 0");
  require(std::isfinite(sigma_gaming_rate) && sigma_gaming_rate >= 0.0,
          "sigma_gaming_rate", "must be >= 0");
  require(std::isfinite(gamma) && gamma >= 0.0, "gamma", "must be >= 0");
  require(std::isfinite(xi) && xi >= 0.0, "xi", "must be >= 0");
  require(std::isfinite(dt) && dt > 0.0, "dt", "must be > 0");
  require(steps >= 1, "steps", "must be >= 1");
  require(trials >= 1, "trials", "must be >= 1");
}

double drift(double s, const MacroConfig& config) {
  if (!(s >= 0.0 && s <= config.s_max)) {
    throw InvalidArgument("drift: s outside [0, s_max]");
  }
  return config.sigma_total() - config.gamma;
}

double rk4_step(double s, const MacroConfig& config, double dt) {
  const double rate = config.sigma_total() - config.gamma;
  return rk4_step(s, [rate](double) { return rate; }, dt);
}

double step_with_noise(double s, const MacroConfig& config, double gaussian_draw) {
  const double next = rk4_step(s, config, config.dt) +
                      config.xi * std::sqrt(config.dt) * gaussian_draw;
  return std::clamp(next, 0.0, config.s_max);
}

Trajectory simulate_trial(const MacroConfig& config, std::size_t trial_index) {
  config.validate();
  GaussianStream rng(config.master_seed, trial_index);
  Trajectory traj;
  traj.times.resize(config.steps + 1);
  traj.s_values.resize(config.steps + 1);
  double s = config.s0;
  traj.times[0] = 0.0;
  traj.s_values[0] = s;
  for (std::size_t k = 1; k <= config.steps; ++k) {
    s = step_with_noise(s, config, rng.normal());
    traj.times[k] = static_cast<double>(k) * config.dt;
    traj.s_values[k] = s;
  }
  return traj;
}

EnsembleSummary run_ensemble(const MacroConfig& config, unsigned threads) {
  config.validate();
  std::vector<std::vector<double>> paths(config.trials);
  detail::parallel_for(config.trials, threads, [&](std::size_t i) {
    paths[i] = simulate_trial(config, i).s_values;
  });

  EnsembleSummary summary;
  summary.dt = config.dt;
  const std::size_t points = config.steps + 1;
  summary.mean_path.resize(points);
  summary.std_path.resize(points);
  std::vector<double> column(config.trials);
  for (std::size_t k = 0; k < points; ++k) {
    for (std::size_t i = 0; i < config.trials; ++i) column[i] = paths[i][k];
    const MeanStd ms = mean_std(column);
    summary.mean_path[k] = std::clamp(ms.mean, 0.0, config.s_max);
    summary.std_path[k] = ms.std;
  }
  summary.final_values = column;
  summary.final_mean = summary.mean_path.back();
  summary.final_std = summary.std_path.back();
  return summary;
}

std::string Trajectory::to_csv() const {
  std::string out = "step,time,s\n";
  for (std::size_t k = 0; k < s_values.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(times[k]);
    out += ',';
    out += format_double(s_values[k]);
    out += '\n';
  }
  return out;
}

std::string EnsembleSummary::to_csv() const {
  std::string out = "step,time,mean,std\n";
  for (std::size_t k = 0; k < mean_path.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(static_cast<double>(k) * dt);
    out += ',';
    out += format_double(mean_path[k]);
    out += ',';
    out += format_double(std_path[k]);
    out += '\n';
  }
  return out;
}

}  // namespace ethent
