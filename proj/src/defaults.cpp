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

#include "ethent/defaults.hpp"

#include <cmath>

namespace ethent::defaults {

MacroConfig figure2_baseline() {
  MacroConfig c;
  c.s0 = kInitialEntropy;
  c.s_max = std::log(static_cast<double>(kGoalCount));
  c.sigma_noise_rate = kNoiseRate;
  c.sigma_gaming_rate = kGamingRate;
  c.gamma = 0.0;
  c.xi = kXi;
  c.dt = kDt;
  c.steps = kSteps;
  c.trials = kTrials;
  c.master_seed = kMasterSeed;
  return c;
}

MicroConfig micro() {
  MicroConfig c;
  c.n_goals = kMicroGoals;
  c.theta0 = concentrated_logits(kMicroGoals, kMicroInitialEntropy);
  c.proxy_dist = GoalDistribution::uniform(kMicroGoals);
  c.intended_goal = 0;
  c.eta = kMicroEta;
  c.sigma_eps = kMicroSigmaEps;
  c.align_strength = 0.0;
  c.steps = kMicroSteps;
  c.seed = kMasterSeed;
  return c;
}

}  // namespace ethent::defaults
