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

#include <gtest/gtest.h>

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <random>

#include "ethent/error.hpp"
#include "oracles.hpp"

namespace ethent {
namespace {

// n values with exactly the requested sample mean and sample std.
std::vector<double> with_moments(std::size_t n, double mean, double std) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (i % 2 == 0) ? 1.0 : -1.0;
  if (n % 2 == 1) x.back() = 0.0;
  const oracle::TwoPass m = oracle::two_pass(x);
  for (double& v : x) v = mean + (v - m.mean) * std / m.std;
  return x;
}

TEST(MeanStdTest, Examples) {
  const MeanStd m = mean_std(std::vector<double>{1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(m.mean, 2.0);
  EXPECT_DOUBLE_EQ(m.std, 1.0);
  const MeanStd c = mean_std(std::vector<double>(7, 4.25));
  EXPECT_EQ(c.mean, 4.25);
  EXPECT_EQ(c.std, 0.0);
  EXPECT_EQ(mean_std(std::vector<double>{3.0}).std, 0.0);
  EXPECT_THROW(mean_std(std::vector<double>{}), InvalidArgument);
}

TEST(MeanStdTest, MatchesTwoPassOracle) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> z(1.7, 1.1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> x(2 + rng() % 200);
    for (double& v : x) v = z(rng);
    const MeanStd m = mean_std(x);
    const oracle::TwoPass ref = oracle::two_pass(x);
    EXPECT_NEAR(m.mean, ref.mean, 1e-12);
    EXPECT_NEAR(m.std, ref.std, 1e-12);
  }
}

TEST(PooledTTestTest, IdenticalSamples) {
  const std::vector<double> a{0.1, 0.4, 0.2, 0.9};
  const TTestResult r = pooled_t_test(a, a);
  EXPECT_EQ(r.t_stat, 0.0);
  EXPECT_EQ(r.df, 6u);
  EXPECT_DOUBLE_EQ(r.p_two_sided, 1.0);
  EXPECT_FALSE(r.degenerate);
}

TEST(PooledTTestTest, SummaryStatisticsAgainstZeros) {
  const std::vector<double> a = with_moments(20, 1.69, 1.08);
  const std::vector<double> b(20, 0.0);
  const TTestResult r = pooled_t_test(a, b);
  EXPECT_NEAR(r.t_stat, 6.998, 1e-3);
  EXPECT_EQ(r.df, 38u);
  const TTestResult flipped = pooled_t_test(b, a);
  EXPECT_DOUBLE_EQ(flipped.t_stat, -r.t_stat);
  EXPECT_DOUBLE_EQ(flipped.p_two_sided, r.p_two_sided);
  EXPECT_NEAR(r.p_two_sided, oracle::t_two_sided_p_quadrature(r.t_stat, 38.0), 1e-12);
}

TEST(PooledTTestTest, DegenerateVariance) {
  const std::vector<double> zeros(20, 0.0);
  const std::vector<double> ones(20, 1.0);
  const TTestResult same = pooled_t_test(zeros, zeros);
  EXPECT_TRUE(same.degenerate);
  EXPECT_EQ(same.t_stat, 0.0);
  EXPECT_EQ(same.p_two_sided, 1.0);
  const TTestResult apart = pooled_t_test(zeros, ones);
  EXPECT_TRUE(apart.degenerate);
  EXPECT_TRUE(std::isinf(apart.t_stat));
  EXPECT_LT(apart.t_stat, 0.0);
  EXPECT_EQ(apart.p_two_sided, 0.0);
  EXPECT_THROW(pooled_t_test(std::vector<double>{1.0}, ones), InvalidArgument);
}

TEST(StudentTTest, MatchesQuadratureOracle) {
  for (double df : {1.0, 2.0, 5.0, 38.0, 200.0}) {
    for (double t : {0.0, 0.3, 1.0, 2.5, 4.0, 8.0, 14.2}) {
      const double p = student_t_two_sided_p(t, df);
      const double ref = oracle::t_two_sided_p_quadrature(t, df);
      EXPECT_NEAR(p, ref, 1e-12) << "t " << t << " df " << df;
      if (ref > 1e-300) {
        EXPECT_NEAR(p / ref, 1.0, 1e-8) << "t " << t << " df " << df;
      }
    }
  }
}

TEST(StudentTTest, ReferenceValues) {
  EXPECT_DOUBLE_EQ(student_t_two_sided_p(0.0, 38.0), 1.0);
  EXPECT_NEAR(student_t_two_sided_p(1.0, 38.0), 0.323636, 1e-6);
  EXPECT_NEAR(student_t_two_sided_p(2.5, 38.0), 0.016853, 1e-6);
  const double tail = student_t_two_sided_p(14.2, 38.0);
  EXPECT_GT(tail, 4.19e-18);
  EXPECT_LT(tail, 4.19e-16);
}

TEST(StudentTTest, ApproachesNormalForLargeDf) {
  for (double t : {0.5, 1.0, 1.96, 3.0}) {
    EXPECT_NEAR(student_t_two_sided_p(t, 1e4), std::erfc(t / std::sqrt(2.0)), 1e-4);
  }
}

TEST(StudentTTest, MonotoneAndSymmetric) {
  double previous = 1.0;
  for (double t = 0.05; t < 20.0; t += 0.05) {
    const double p = student_t_two_sided_p(t, 38.0);
    EXPECT_LE(p, previous);
    EXPECT_EQ(p, student_t_two_sided_p(-t, 38.0));
    previous = p;
  }
}

TEST(IncompleteBetaTest, Examples) {
  EXPECT_EQ(regularized_incomplete_beta(0.0, 2.5, 3.0), 0.0);
  EXPECT_EQ(regularized_incomplete_beta(1.0, 2.5, 3.0), 1.0);
  for (double x : {0.1, 0.37, 0.9}) {
    EXPECT_NEAR(regularized_incomplete_beta(x, 1.0, 1.0), x, 1e-15);
  }
  EXPECT_NEAR(regularized_incomplete_beta(0.5, 2.0, 2.0), 0.5, 1e-15);
  EXPECT_THROW(regularized_incomplete_beta(1.5, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(regularized_incomplete_beta(0.5, 0.0, 1.0), InvalidArgument);
}

TEST(IncompleteBetaTest, SymmetryAndReferenceImplementation) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double x = u(rng);
    const double a = 0.1 + 50.0 * u(rng);
    const double b = 0.1 + 50.0 * u(rng);
    const double ix = regularized_incomplete_beta(x, a, b);
    EXPECT_NEAR(ix + regularized_incomplete_beta(1.0 - x, b, a), 1.0, 1e-12);
    EXPECT_NEAR(ix, boost::math::ibeta(a, b, x), 1e-12) << x << " " << a << " " << b;
  }
}

TEST(SignTestTest, Examples) {
  EXPECT_DOUBLE_EQ(sign_test(std::vector<double>{1, -1, 2, -2, 3, -3}), 1.0);
  EXPECT_NEAR(sign_test(std::vector<double>(10, 0.5)), 1.953e-3, 1e-6);
  EXPECT_DOUBLE_EQ(sign_test(std::vector<double>(10, 0.5)), 2.0 / 1024.0);
  EXPECT_THROW(sign_test(std::vector<double>(5, 0.0)), InvalidArgument);
  EXPECT_THROW(sign_test(std::vector<double>{}), InvalidArgument);
}

TEST(SignTestTest, ZerosAreDropped) {
  EXPECT_DOUBLE_EQ(sign_test(std::vector<double>{0.0, 0.0, 1.0, 1.0, 1.0}),
                   sign_test(std::vector<double>{1.0, 1.0, 1.0}));
}

TEST(SignTestTest, MatchesExactBinomialOracle) {
  std::vector<double> deltas(95, 1.0);
  deltas.insert(deltas.end(), 5, -1.0);
  const double p = sign_test(deltas);
  EXPECT_LT(p, 1e-18);
  EXPECT_NEAR(p / oracle::exact_sign_test(95, 100), 1.0, 1e-10);
  for (unsigned n : {1u, 7u, 20u, 63u, 100u, 400u}) {
    for (unsigned k = 0; k <= n; k += 1 + n / 13) {
      std::vector<double> d(k, 1.0);
      d.insert(d.end(), n - k, -2.0);
      const double ref = oracle::exact_sign_test(k, n);
      EXPECT_NEAR(sign_test(d) / ref, 1.0, 1e-10) << k << "/" << n;
    }
  }
}

}  // namespace
}  // namespace ethent
