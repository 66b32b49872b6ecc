// Copyright 2026 The Degenlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "degenlab/info.h"
#include "oracles.h"

namespace degenlab {
namespace {

// I(A;B) straight from the definition on a 2-D table.
double direct_mi(const std::vector<double>& p, int rows, int cols) {
  std::vector<double> pa(rows, 0), pb(cols, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      pa[i] += p[i * cols + j];
      pb[j] += p[i * cols + j];
    }
  }
  double total = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      double v = p[i * cols + j];
      if (v > 0) total += v * std::log2(v / (pa[i] * pb[j]));
    }
  }
  return total;
}

TEST(Distribution, Validation) {
  EXPECT_THROW(DiscreteDistribution({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(DiscreteDistribution({1.5, -0.5}), std::invalid_argument);
  EXPECT_NO_THROW(DiscreteDistribution({0.25, 0.75}));
  std::vector<int> support{1, 3};
  auto u = DiscreteDistribution::uniform_over(4, support);
  EXPECT_DOUBLE_EQ(u[1], 0.5);
  EXPECT_DOUBLE_EQ(u[0], 0.0);
  auto mixed = DiscreteDistribution::point_mass(2, 0).mix(DiscreteDistribution::uniform(2), 0.5);
  EXPECT_DOUBLE_EQ(mixed[0], 0.75);
}

TEST(Lambda, Examples) {
  auto mu = DiscreteDistribution::point_mass(2, 0);
  auto nu = DiscreteDistribution::uniform(2);
  EXPECT_DOUBLE_EQ(triangular_discrimination(mu, mu), 0.0);
  EXPECT_NEAR(triangular_discrimination(mu, nu), 1.0 / 6, 1e-15);
  // Only the mu > nu side counts.
  EXPECT_NEAR(triangular_discrimination(nu, mu), 0.5 * 0.5 / 0.5, 1e-15);
  EXPECT_NEAR(triangular_discrimination(DiscreteDistribution::point_mass(4, 2),
                                        DiscreteDistribution::uniform(4)),
              9.0 / 20, 1e-15);
  EXPECT_THROW(triangular_discrimination(mu, DiscreteDistribution::uniform(3)),
               std::invalid_argument);
}

TEST(Lambda, MatchesDirectFormula) {
  Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    auto mu = random_distribution(1 + t % 9, rng);
    auto nu = random_distribution(1 + t % 9, rng);
    EXPECT_NEAR(triangular_discrimination(mu, nu), oracle::lambda(mu.probs(), nu.probs()),
                1e-14);
  }
}

TEST(Tvd, Examples) {
  auto mu = DiscreteDistribution::point_mass(2, 0);
  EXPECT_DOUBLE_EQ(tvd(mu, mu), 0.0);
  EXPECT_DOUBLE_EQ(tvd(mu, DiscreteDistribution::point_mass(2, 1)), 1.0);
  EXPECT_DOUBLE_EQ(tvd(mu, DiscreteDistribution::uniform(2)), 0.5);
  EXPECT_DOUBLE_EQ(l1_distance(mu, DiscreteDistribution::uniform(2)), 1.0);
}

TEST(Entropy, Basics) {
  EXPECT_DOUBLE_EQ(entropy(DiscreteDistribution::uniform(8)), 3.0);
  EXPECT_DOUBLE_EQ(entropy(DiscreteDistribution::point_mass(3, 1)), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
}

TEST(MutualInformation, Examples) {
  JointTable independent({2, 2}, {0.25, 0.25, 0.25, 0.25});
  EXPECT_NEAR(mutual_information(independent), 0.0, 1e-15);
  JointTable copy({2, 2}, {0.5, 0, 0, 0.5});
  EXPECT_NEAR(mutual_information(copy), 1.0, 1e-15);
  EXPECT_THROW(JointTable({2, 2}, {0.5, 0.5, 0.5, 0}), std::invalid_argument);
}

TEST(MutualInformation, MatchesDefinition) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const int rows = 2 + t % 3, cols = 2 + t % 4;
    auto p = random_distribution(rows * cols, rng).probs();
    EXPECT_NEAR(mutual_information(JointTable({rows, cols}, p)), direct_mi(p, rows, cols), 1e-12);
  }
}

TEST(MutualInformation, ChainRule) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    JointTable tab({2, 3, 2}, random_distribution(12, rng).probs());
    const int a[] = {0}, b[] = {1}, c[] = {2}, ab[] = {0, 1};
    const double lhs = mutual_information(tab, ab, c);
    const double rhs = mutual_information(tab, a, c) + mutual_information(tab, b, c, a);
    EXPECT_NEAR(lhs, rhs, 1e-9);
  }
  JointTable indep({2, 2, 2}, std::vector<double>(8, 0.125));
  EXPECT_NEAR(conditional_mutual_information(indep), 0.0, 1e-15);
}

TEST(Properties, FuzzCampaignIsClean) {
  auto results = fuzz_lambda_properties(10000, 7);
  ASSERT_GE(results.size(), 5u);
  for (const auto& r : results) {
    EXPECT_EQ(r.violations, 0) << r.name << " worst slack " << r.worst_slack;
    EXPECT_GT(r.trials, 0) << r.name;
  }
}

TEST(Distinguisher, SampleCount) {
  EXPECT_EQ(distinguisher_samples(1, 1, std::exp(-1.0)), 48);
  EXPECT_EQ(distinguisher_samples(0.1, 1, 0.05),
            static_cast<std::int64_t>(std::ceil(480 * std::log(20.0))));
}

TEST(Distinguisher, CertainRates) {
  EXPECT_EQ(bernoulli_distinguisher([] { return false; }, 0.1, 1, 0.05), RateVerdict::kLow);
  EXPECT_EQ(bernoulli_distinguisher([] { return true; }, 0.25, 1, 0.05), RateVerdict::kHigh);
}

TEST(Distinguisher, ErrorRateUnderPromise) {
  Rng rng(4);
  const double alpha = 0.1, beta = 1, gamma = 0.05;
  int errors = 0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    const bool high = t % 2 == 1;
    std::bernoulli_distribution coin(high ? (1 + beta) * alpha : alpha);
    RateVerdict v = bernoulli_distinguisher([&] { return coin(rng); }, alpha, beta, gamma);
    errors += (v == RateVerdict::kHigh) != high;
  }
  EXPECT_LE(errors, gamma * trials);
}

}  // namespace
}  // namespace degenlab
