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

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace ethent::oracle {

/// Direct -sum p ln p.
inline double entropy(std::span<const double> p) {
  double s = 0.0;
  for (double v : p) {
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

inline double central_difference(const std::function<double(double)>& f, double h) {
  return (f(h) - f(-h)) / (2.0 * h);
}

/// Two-pass mean and sample std.
struct TwoPass {
  double mean;
  double std;
};
inline TwoPass two_pass(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(x.size());
  if (x.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(x.size() - 1))};
}

/// Two-sided Student-t p-value by quadrature of the density.
inline double t_two_sided_p_quadrature(double t, double df) {
  const double log_norm = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                          0.5 * std::log(df * M_PI);
  auto density = [&](double x) {
    return std::exp(log_norm - (df + 1.0) / 2.0 * std::log1p(x * x / df));
  };
  const double a = std::abs(t);
  if (a < 3.0) {
    // Central mass on [0, a] is well conditioned for small |t|.
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double central = a == 0.0 ? 0.0 : integrator.integrate(density, 0.0, a);
    return 1.0 - 2.0 * central;
  }
  boost::math::quadrature::exp_sinh<double> integrator;
  return 2.0 * integrator.integrate([&](double u) { return density(a + u); }, 0.0,
                                    std::numeric_limits<double>::infinity());
}

/// Exact two-sided sign-test p for k successes of n, via big integers.
inline double exact_sign_test(unsigned k, unsigned n) {
  using boost::multiprecision::cpp_int;
  const unsigned tail_k = std::min(k, n - k);
  cpp_int tail = 0;
  cpp_int binom = 1;  // C(n, 0)
  for (unsigned i = 0; i <= tail_k; ++i) {
    tail += binom;
    binom = binom * (n - i) / (i + 1);
  }
  const cpp_int total = cpp_int(1) << n;
  // 2 * tail / 2^n as a double; values are far from overflow here.
  const double p = 2.0 * static_cast<double>(tail) / static_cast<double>(total);
  return std::min(1.0, p);
}

/// Random point strictly inside the simplex with every entry >= floor.
inline std::vector<double> random_interior(std::mt19937_64& rng, std::size_t n,
                                           double floor = 1e-3) {
  std::gamma_distribution<double> g(1.0, 1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = g(rng);
    sum += v;
  }
  for (double& v : p) v = floor + (1.0 - floor * static_cast<double>(n)) * v / sum;
  return p;
}

/// Random probability-conserving rate vector.
inline std::vector<double> random_conserving(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<double> d(n);
  double mean = 0.0;
  for (double& v : d) {
    v = z(rng);
    mean += v;
  }
  mean /= static_cast<double>(n);
  for (double& v : d) v -= mean;
  return d;
}

}  // namespace ethent::oracle
