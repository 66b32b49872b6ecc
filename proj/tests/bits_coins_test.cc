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

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "degenlab/bits.h"
#include "degenlab/coins.h"

namespace degenlab {
namespace {

TEST(Bits, CeilLog2) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(3), 2);
  EXPECT_EQ(ceil_log2(64), 6);
  EXPECT_EQ(ceil_log2(65), 7);
  EXPECT_THROW(ceil_log2(0), std::invalid_argument);
}

TEST(Bits, WidthForSmallBoundsIsOne) {
  EXPECT_EQ(width_for(1), 1);
  EXPECT_EQ(width_for(2), 1);
  EXPECT_EQ(width_for(8), 3);
  EXPECT_EQ(width_for(9), 4);
}

TEST(Bits, RoundTrip) {
  BitWriter w;
  w.write_bit(true);
  w.write_uint(5, 3);
  w.write_bounded(6, 10);
  std::vector<int> list{1, 4, 7};
  w.write_list(list, 5, 8);
  const BitString bits = w.take();
  EXPECT_EQ(bits.size(), 1u + 3 + 4 + 3 + 3 * 3);

  BitReader r(bits);
  EXPECT_TRUE(r.read_bit());
  EXPECT_EQ(r.read_uint(3), 5u);
  EXPECT_EQ(r.read_bounded(10), 6u);
  EXPECT_EQ(r.read_list(5, 8), list);
  EXPECT_TRUE(r.at_end());
}

TEST(Bits, RejectsOverflowAndOverrun) {
  BitWriter w;
  EXPECT_THROW(w.write_uint(8, 3), std::exception);
  EXPECT_THROW(w.write_bounded(10, 10), std::exception);
  BitString empty;
  BitReader r(empty);
  EXPECT_THROW(r.read_bit(), std::exception);
}

TEST(Bits, DigestSeparatesStrings) {
  BitString a, b;
  for (int i = 0; i < 70; ++i) {
    a.push_back(i % 3 == 0);
    b.push_back(i % 3 == 0);
  }
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.digest(), b.digest());
  b.push_back(false);
  EXPECT_NE(a.digest(), b.digest());
  EXPECT_EQ(BitString().to_string(), "");
}

TEST(Coins, DeriveSeedIsDeterministicAndSpread) {
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(42, s));
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(Coins, ForEachOutcomeEnumeratesExactly) {
  std::map<int, double> mass;
  for_each_outcome(
      [](Coins& c) {
        int a = static_cast<int>(c.below(3));
        int b = c.bernoulli(0.25) ? 1 : 0;
        return a * 2 + b;
      },
      [&](double w, int v) { mass[v] += w; });
  ASSERT_EQ(mass.size(), 6u);
  double total = 0;
  for (auto [v, w] : mass) {
    total += w;
    EXPECT_NEAR(w, (v % 2 ? 0.25 : 0.75) / 3, 1e-15);
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(Coins, ForEachOutcomeHandlesDataDependentBranching) {
  double total = 0;
  int leaves = 0;
  for_each_outcome(
      [](Coins& c) { return c.below(2) == 0 ? 0 : 1 + static_cast<int>(c.below(4)); },
      [&](double w, int) {
        total += w;
        ++leaves;
      });
  EXPECT_EQ(leaves, 5);
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(Coins, RandomPermutationIsUniformOverSmallSets) {
  std::map<std::vector<int>, double> mass;
  for_each_outcome([](Coins& c) { return random_permutation(c, 3); },
                   [&](double w, const std::vector<int>& p) { mass[p] += w; });
  ASSERT_EQ(mass.size(), 6u);
  for (auto& [p, w] : mass) EXPECT_NEAR(w, 1.0 / 6, 1e-15);
}

TEST(Coins, SampleSubsetDistinct) {
  Rng rng(5);
  RngCoins coins(rng);
  for (int t = 0; t < 100; ++t) {
    auto s = sample_subset(coins, {0, 1, 2, 3, 4, 5, 6, 7}, 3);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(std::set<int>(s.begin(), s.end()).size(), 3u);
  }
}

}  // namespace
}  // namespace degenlab
