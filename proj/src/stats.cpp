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

#include "ethent/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ethent/error.hpp"

namespace ethent {

MeanStd mean_std(std::span<const double> samples) {
  if (samples.empty()) throw InvalidArgument("mean_std: empty sample");
  // Welford
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  for (double x : samples) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  if (n == 1) return {mean, 0.0};
  return {mean, std::sqrt(std::max(m2, 0.0) / static_cast<double>(n - 1))};
}

namespace {

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double x, double a, double b) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("regularized_incomplete_beta: x outside [0, 1]");
  }
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("regularized_incomplete_beta: a, b must be > 0");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  // The fraction converges fastest below the mean of the beta density; use
  // I_x(a, b) = 1 - I_{1-x}(b, a) above it.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(x, a, b) / a;
  }
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw InvalidArgument("degrees of freedom must be > 0");
  if (std::isnan(t)) throw InvalidArgument("t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return std::clamp(regularized_incomplete_beta(x, 0.5 * df, 0.5), 0.0, 1.0);
}

TTestResult pooled_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw InvalidArgument("pooled_t_test: each sample needs at least 2 values");
  }
  const MeanStd sa = mean_std(a);
  const MeanStd sb = mean_std(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const std::size_t df = a.size() + b.size() - 2;
  const double pooled_var =
      ((na - 1.0) * sa.std * sa.std + (nb - 1.0) * sb.std * sb.std) /
      static_cast<double>(df);
  const double diff = sa.mean - sb.mean;

  TTestResult result;
  result.df = df;
  if (pooled_var == 0.0) {
    result.degenerate = true;
    if (diff == 0.0) {
      result.t_stat = 0.0;
      result.p_two_sided = 1.0;
    } else {
      result.t_stat = std::copysign(std::numeric_limits<double>::infinity(), diff);
      result.p_two_sided = 0.0;
    }
    return result;
  }
  result.t_stat = diff / (std::sqrt(pooled_var) * std::sqrt(1.0 / na + 1.0 / nb));
  result.p_two_sided = student_t_two_sided_p(result.t_stat, static_cast<double>(df));
  return result;
}

double sign_test(std::span<const double> deltas) {
  std::size_t positives = 0;
  std::size_t n = 0;
  for (double d : deltas) {
    if (std::isnan(d)) throw InvalidArgument("sign_test: NaN delta");
    if (d == 0.0) continue;
    ++n;
    if (d > 0.0) ++positives;
  }
  if (n == 0) throw InvalidArgument("sign_test: no nonzero deltas");

  // Tail mass of Binomial(n, 1/2) at or beyond the smaller count.
  const std::size_t k = std::min(positives, n - positives);
  const double nd = static_cast<double>(n);
  const double log_half_n = -nd * std::log(2.0);
  double tail = 0.0;
  for (std::size_t i = 0; i <= k; ++i) {
    const double id = static_cast<double>(i);
    tail += std::exp(std::lgamma(nd + 1.0) - std::lgamma(id + 1.0) -
                     std::lgamma(nd - id + 1.0) + log_half_n);
  }
  return std::min(1.0, 2.0 * tail);
}

}  // namespace ethent
