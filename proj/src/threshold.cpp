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

#include "ethent/threshold.hpp"

#include <cmath>

#include "ethent/error.hpp"
#include "ethent/format.hpp"

namespace ethent {

void SystemScale::validate() const {
  if (!(n_params >= 2.0) || !std::isfinite(n_params)) {
    throw InvalidArgument("n_params must be a finite count >= 2");
  }
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw InvalidArgument("lambda_max must be > 0");
  }
}

std::string_view to_string(Stability s) noexcept {
  return s == Stability::kStable ? "stable" : "drift";
}

double gamma_crit(const SystemScale& scale) {
  scale.validate();
  return 0.5 * scale.lambda_max * std::log(scale.n_params);
}

Stability classify_stability(double gamma, const SystemScale& scale) {
  if (!(gamma >= 0.0)) throw InvalidArgument("gamma must be >= 0");
  return gamma >= gamma_crit(scale) ? Stability::kStable : Stability::kDrift;
}

namespace {

void check_axis(const std::vector<double>& axis, const char* name,
                double minimum) {
  if (axis.empty()) {
    throw InvalidArgument(std::string(name) + " must be non-empty");
  }
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!std::isfinite(axis[i]) || axis[i] < minimum) {
      throw InvalidArgument(std::string(name) + " value out of range at index " +
                            std::to_string(i));
    }
    if (i > 0 && !(axis[i] > axis[i - 1])) {
      throw InvalidArgument(std::string(name) + " must be strictly increasing");
    }
  }
}

}  // namespace

PhaseGrid phase_grid(std::vector<double> n_axis, std::vector<double> gamma_axis,
                     double lambda_max) {
  check_axis(n_axis, "n_axis", 2.0);
  check_axis(gamma_axis, "gamma_axis", 0.0);
  PhaseGrid grid{std::move(n_axis), std::move(gamma_axis), lambda_max, {}};
  grid.labels.reserve(grid.n_axis.size() * grid.gamma_axis.size());
  for (double gamma : grid.gamma_axis) {
    for (double n : grid.n_axis) {
      grid.labels.push_back(classify_stability(gamma, {n, lambda_max}));
    }
  }
  return grid;
}

std::string PhaseGrid::to_csv() const {
  std::string out = "gamma,N,label\n";
  for (std::size_t i = 0; i < gamma_axis.size(); ++i) {
    for (std::size_t j = 0; j < n_axis.size(); ++j) {
      out += format_double(gamma_axis[i]);
      out += ',';
      out += format_double(n_axis[j]);
      out += ',';
      out += to_string(at(i, j));
      out += '\n';
    }
  }
  return out;
}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > 0.0)) {
    throw InvalidArgument("log_space bounds must be > 0");
  }
  std::vector<double> out = lin_space(std::log10(lo), std::log10(hi), count);
  for (double& v : out) v = std::pow(10.0, v);
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> lin_space(double lo, double hi, std::size_t count) {
  if (count == 0) throw InvalidArgument("axis count must be >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + step * static_cast<double>(i);
  }
  out.back() = hi;
  return out;
}

}  // namespace ethent
