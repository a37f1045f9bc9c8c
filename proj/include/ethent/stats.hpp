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
 * @file stats.hpp
 * @brief Descriptive statistics, Student's pooled two-sample t-test, and the
 * exact sign test.
 *
 * The t-test p-value is evaluated through the regularized incomplete beta
 * function, P(|T| >= |t|) = I_x(df/2, 1/2) with x = df / (df + t^2).
 */

#include <cstddef>
#include <span>

namespace ethent {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample (n - 1) convention; 0 for a single sample
};

MeanStd mean_std(std::span<const double> samples);

struct TTestResult {
  double t_stat = 0.0;
  std::size_t df = 0;
  double p_two_sided = 1.0;
  /// Pooled variance was zero. t is 0 (equal means) or +/-inf (unequal).
  bool degenerate = false;
};

/// t = (mean(a) - mean(b)) / (s_p * sqrt(1/n_a + 1/n_b)), df = n_a + n_b - 2.
/// Both samples need at least two values.
TTestResult pooled_t_test(std::span<const double> a, std::span<const double> b);

/// Two-sided p-value of Student's t with `df` degrees of freedom.
double student_t_two_sided_p(double t, double df);

/// I_x(a, b) for x in [0, 1], a > 0, b > 0.
double regularized_incomplete_beta(double x, double a, double b);

/// Exact two-sided binomial sign test on the nonzero deltas against a fair
/// coin. Throws InvalidArgument when every delta is zero.
double sign_test(std::span<const double> deltas);

}  // namespace ethent
