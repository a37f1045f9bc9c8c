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
 * @file macro.hpp
 * @brief Drift-diffusion integration of the entropy balance dS/dt = sigma - gamma.
 *
 * Each step advances the drift with classical RK4, adds Gaussian diffusion
 * xi * sqrt(dt) * z, and projects the result onto [0, s_max]. The projection
 * makes both bounds absorbing whenever the net drift points outward.
 *
 * Trials draw from independent substreams keyed by (master_seed, trial
 * index), so an ensemble is bit-identical under any thread count.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ethent {

struct MacroConfig {
  double s0 = 0.32;
  double s_max = 3.4657359027997265;  // ln 32
  double sigma_noise_rate = 0.0;
  double sigma_gaming_rate = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
  double dt = 0.01;
  std::size_t steps = 10000;
  std::size_t trials = 20;
  std::uint64_t master_seed = 0;

  /// Throws InvalidArgument naming the first offending field.
  void validate() const;

  double sigma_total() const { return sigma_noise_rate + sigma_gaming_rate; }
};

struct Trajectory {
  std::vector<double> times;
  std::vector<double> s_values;

  /// Header `step,time,s`.
  std::string to_csv() const;
};

struct EnsembleSummary {
  std::vector<double> final_values;
  std::vector<double> mean_path;
  std::vector<double> std_path;
  double final_mean = 0.0;
  double final_std = 0.0;
  double dt = 0.0;

  /// Header `step,time,mean,std`.
  std::string to_csv() const;
};

/// Net entropy rate; constant in s for the baseline production model.
double drift(double s, const MacroConfig& config);

/// One classical RK4 step of ds/dt = field(s).
template <typename Field>
double rk4_step(double s, const Field& field, double dt) {
  const double k1 = field(s);
  const double k2 = field(s + 0.5 * dt * k1);
  const double k3 = field(s + 0.5 * dt * k2);
  const double k4 = field(s + dt * k3);
  return s + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double rk4_step(double s, const MacroConfig& config, double dt);

double step_with_noise(double s, const MacroConfig& config, double gaussian_draw);

Trajectory simulate_trial(const MacroConfig& config, std::size_t trial_index);

/// `threads` = 0 uses the hardware concurrency.
EnsembleSummary run_ensemble(const MacroConfig& config, unsigned threads = 0);

}  // namespace ethent
