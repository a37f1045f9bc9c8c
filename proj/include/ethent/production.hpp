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

// Entropy-production channels. Rates are in nats per unit of macro
// simulation time.

#include "ethent/entropy.hpp"

namespace ethent {

struct ProductionParams {
  double eta = 1e-4;
  double lambda_max = 1.2;
  double trace_sigma = 0.01;
  double alpha_instr = 0.0;
  double instrumental_i = 0.0;

  void validate() const;
};

/// (eta^2 / 2) * lambda_max * tr(Sigma).
double sigma_noise(const ProductionParams& params);

/// Bare formula; accepts eta = 0 and any non-negative inputs.
double sigma_noise(double eta, double lambda_max, double trace_sigma);

/// eta * D_KL(proxy || truth).
double sigma_gaming(double eta, const GoalDistribution& p_proxy,
                    const GoalDistribution& p_true);

/// sigma_gaming scaled by the instrumental gain exp(alpha * I).
double sigma_gaming_amplified(double eta, const GoalDistribution& p_proxy,
                              const GoalDistribution& p_true,
                              double alpha_instr, double instrumental_i);

double sigma_total(double noise_rate, double gaming_rate);

}  // namespace ethent
