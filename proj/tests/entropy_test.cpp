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

#include "ethent/entropy.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ethent/error.hpp"
#include "oracles.hpp"

namespace ethent {
namespace {

TEST(GoalDistributionTest, RejectsMalformedVectors) {
  EXPECT_THROW(GoalDistribution({1.0}), InvalidArgument);
  EXPECT_THROW(GoalDistribution({0.5, 0.6}), InvalidArgument);
  EXPECT_THROW(GoalDistribution({1.2, -0.2}), InvalidArgument);
  EXPECT_THROW(GoalDistribution({NAN, 1.0}), InvalidArgument);
}

TEST(GoalDistributionTest, RenormalizesFloatingPointDrift) {
  const GoalDistribution d({0.3, 0.7 + 5e-10});
  EXPECT_NEAR(d[0] + d[1], 1.0, 1e-15);
  EXPECT_THROW(GoalDistribution({0.3, 0.7 + 5e-9}), InvalidArgument);
}

TEST(ShannonEntropyTest, ConcentratedStartingState) {
  EXPECT_NEAR(shannon_entropy(GoalDistribution({0.9, 0.1})), 0.3251, 1e-4);
}

TEST(ShannonEntropyTest, DegenerateAndUniform) {
  EXPECT_EQ(shannon_entropy(GoalDistribution({1.0, 0.0, 0.0})), 0.0);
  EXPECT_NEAR(shannon_entropy(GoalDistribution::uniform(4)), std::log(4.0), 1e-15);
  EXPECT_NEAR(shannon_entropy(GoalDistribution::uniform(4)), 1.3863, 1e-4);
}

TEST(MaxEntropyTest, LogOfGoalCount) {
  EXPECT_NEAR(max_entropy(2), 0.6931, 1e-4);
  EXPECT_NEAR(max_entropy(4), 1.3863, 1e-4);
  EXPECT_NEAR(max_entropy(32), 3.4657, 1e-4);
  EXPECT_THROW(max_entropy(1), InvalidArgument);
}

TEST(KlDivergenceTest, HandComputedValues) {
  const GoalDistribution half({0.5, 0.5});
  const GoalDistribution skew({0.9, 0.1});
  EXPECT_EQ(kl_divergence(half, half), 0.0);
  const double forward = 0.5 * std::log(0.5 / 0.9) + 0.5 * std::log(0.5 / 0.1);
  const double backward = 0.9 * std::log(0.9 / 0.5) + 0.1 * std::log(0.1 / 0.5);
  EXPECT_NEAR(kl_divergence(half, skew), forward, 1e-15);
  EXPECT_NEAR(kl_divergence(half, skew), 0.5108, 1e-4);
  EXPECT_NEAR(kl_divergence(skew, half), backward, 1e-15);
  EXPECT_NEAR(kl_divergence(skew, half), 0.3681, 1e-4);
}

TEST(KlDivergenceTest, SupportViolationIsInfiniteDivergence) {
  EXPECT_THROW(kl_divergence(GoalDistribution({0.5, 0.5}), GoalDistribution({1.0, 0.0})),
               InfiniteDivergence);
  // Zero mass in p where q is zero is fine.
  EXPECT_EQ(kl_divergence(GoalDistribution({1.0, 0.0}), GoalDistribution({1.0, 0.0})), 0.0);
  EXPECT_THROW(kl_divergence(GoalDistribution::uniform(2), GoalDistribution::uniform(3)),
               InvalidArgument);
}

TEST(AlignmentEnergyTest, LinearInEveryFactor) {
  EXPECT_EQ(alignment_energy(0.0, {}), 0.0);
  EXPECT_NEAR(alignment_energy(0.3251, {1.0, 1.0}), -0.3251, 1e-15);
  const double e1 = alignment_energy(0.7, {1.5, 2.0});
  EXPECT_DOUBLE_EQ(alignment_energy(0.7, {1.5, 4.0}), 2.0 * e1);
  EXPECT_DOUBLE_EQ(alignment_energy(1.4, {1.5, 2.0}), 2.0 * e1);
  EXPECT_DOUBLE_EQ(alignment_energy(0.7, {3.0, 2.0}), 2.0 * e1);
  EXPECT_THROW(alignment_energy(0.1, {0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(alignment_energy(0.1, {1.0, -1.0}), InvalidArgument);
}

TEST(EntropyRateTest, TrivialCases) {
  const GoalDistribution p({0.2, 0.3, 0.5});
  const std::vector<double> zero(3, 0.0);
  EXPECT_EQ(entropy_rate_chain_rule(p, zero), 0.0);
  for (double a : {-2.0, 0.1, 7.5}) {
    const std::vector<double> dp{a, -a};
    EXPECT_NEAR(entropy_rate_chain_rule(GoalDistribution({0.5, 0.5}), dp), 0.0, 1e-15);
  }
}

TEST(EntropyRateTest, RejectsNonConservingAndBoundaryRates) {
  const GoalDistribution p({0.2, 0.3, 0.5});
  EXPECT_THROW(entropy_rate_chain_rule(p, std::vector<double>{0.1, 0.0, 0.0}),
               InvalidArgument);
  EXPECT_THROW(entropy_rate_chain_rule(GoalDistribution({0.0, 1.0}),
                                       std::vector<double>{0.1, -0.1}),
               InvalidArgument);
  EXPECT_THROW(entropy_rate_chain_rule(p, std::vector<double>{0.1, -0.1}), InvalidArgument);
}

// Properties over random draws.

TEST(EntropyPropertyTest, BoundedAndPermutationInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<double> probs = oracle::random_interior(rng, n, 0.0);
    if (trial % 5 == 0) probs[rng() % n] = 0.0;
    double sum = 0.0;
    for (double v : probs) sum += v;
    for (double& v : probs) v /= sum;
    const GoalDistribution d(probs);
    const double s = shannon_entropy(d);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, max_entropy(n) + 1e-12);
    EXPECT_NEAR(s, oracle::entropy(probs), 1e-12);
    std::shuffle(probs.begin(), probs.end(), rng);
    EXPECT_NEAR(shannon_entropy(GoalDistribution(probs)), s, 1e-12);
  }
}

TEST(KlPropertyTest, NonNegativeZeroOnlyOnIdentity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const GoalDistribution p(oracle::random_interior(rng, n));
    const GoalDistribution q(oracle::random_interior(rng, n));
    EXPECT_GT(kl_divergence(p, q), 0.0);
    EXPECT_EQ(kl_divergence(p, p), 0.0);
  }
}

TEST(EntropyRatePropertyTest, MatchesFiniteDifferenceOfEntropy) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const std::vector<double> p = oracle::random_interior(rng, n, 0.01);
    const std::vector<double> dp = oracle::random_conserving(rng, n);
    const double analytic = entropy_rate_chain_rule(GoalDistribution(p), dp);
    const double fd = oracle::central_difference(
        [&](double h) {
          std::vector<double> moved(n);
          for (std::size_t i = 0; i < n; ++i) moved[i] = p[i] + h * dp[i];
          return oracle::entropy(moved);
        },
        1e-6);
    EXPECT_LE(std::abs(analytic - fd), 1e-6 * std::max(std::abs(fd), 1e-2))
        << "trial " << trial;
  }
}

}  // namespace
}  // namespace ethent
