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

#include "ethent/production.hpp"

#include <cmath>

#include "ethent/error.hpp"

namespace ethent {

void ProductionParams::validate() const {
  if (!(eta > 0.0)) throw InvalidArgument("eta must be > 0");
  if (!(lambda_max > 0.0)) throw InvalidArgument("lambda_max must be > 0");
  if (!(trace_sigma >= 0.0)) throw InvalidArgument("trace_sigma must be >= 0");
  if (!(alpha_instr >= 0.0)) throw InvalidArgument("alpha_instr must be >= 0");
  if (!(instrumental_i >= 0.0)) {
    throw InvalidArgument("instrumental_i must be >= 0");
  }
}

double sigma_noise(const ProductionParams& params) {
  params.validate();
  return sigma_noise(params.eta, params.lambda_max, params.trace_sigma);
}

double sigma_noise(double eta, double lambda_max, double trace_sigma) {
  if (!(eta >= 0.0) || !(lambda_max >= 0.0) || !(trace_sigma >= 0.0)) {
    throw InvalidArgument("sigma_noise inputs must be >= 0");
  }
  return 0.5 * eta * eta * lambda_max * trace_sigma;
}

double sigma_gaming(double eta, const GoalDistribution& p_proxy,
                    const GoalDistribution& p_true) {
  if (!(eta >= 0.0)) throw InvalidArgument("eta must be >= 0");
  return eta * kl_divergence(p_proxy, p_true);
}

double sigma_gaming_amplified(double eta, const GoalDistribution& p_proxy,
                              const GoalDistribution& p_true,
                              double alpha_instr, double instrumental_i) {
  if (!(alpha_instr >= 0.0) || !(instrumental_i >= 0.0)) {
    throw InvalidArgument("instrumental gain inputs must be >= 0");
  }
  const double base = sigma_gaming(eta, p_proxy, p_true);
  const double exponent = alpha_instr * instrumental_i;
  return exponent == 0.0 ? base : base * std::exp(exponent);
}

double sigma_total(double noise_rate, double gaming_rate) {
  if (!(noise_rate >= 0.0) || !(gaming_rate >= 0.0)) {
    throw InvalidArgument("production rates must be >= 0");
  }
  return noise_rate + gaming_rate;
}

}  // namespace ethent
