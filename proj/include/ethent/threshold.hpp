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
 * @file threshold.hpp
 * @brief Critical alignment work and stability classification.
 *
 * The boundary is gamma_crit = (lambda_max / 2) ln N. A system receiving
 * alignment work gamma >= gamma_crit is Stable; the boundary itself belongs
 * to the Stable set.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ethent {

struct SystemScale {
  double n_params = 7e9;    // parameter count N
  double lambda_max = 1.2;  // dominant Fisher eigenvalue

  void validate() const;
};

enum class Stability { kStable, kDrift };

std::string_view to_string(Stability s) noexcept;

double gamma_crit(const SystemScale& scale);

Stability classify_stability(double gamma, const SystemScale& scale);

/// Stability labels over an (N, gamma) grid.
struct PhaseGrid {
  std::vector<double> n_axis;
  std::vector<double> gamma_axis;
  double lambda_max = 0.0;
  /// Row-major: labels[i * n_axis.size() + j] is (gamma_axis[i], n_axis[j]).
  std::vector<Stability> labels;

  Stability at(std::size_t gamma_index, std::size_t n_index) const {
    return labels[gamma_index * n_axis.size() + n_index];
  }

  /// CSV with header `gamma,N,label`, one row per cell, gamma-major.
  std::string to_csv() const;
};

/// Axes must be non-empty and strictly increasing with every N >= 2 and
/// every gamma >= 0.
PhaseGrid phase_grid(std::vector<double> n_axis, std::vector<double> gamma_axis,
                     double lambda_max);

/// count points from lo to hi inclusive, evenly spaced in log10.
std::vector<double> log_space(double lo, double hi, std::size_t count);
std::vector<double> lin_space(double lo, double hi, std::size_t count);

}  // namespace ethent
