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

#include "degenlab/coins.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace degenlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ull));
}

std::size_t RngCoins::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  if (n == 1) return 0;
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(*rng_);
}

bool RngCoins::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  std::bernoulli_distribution dist(p);
  return dist(*rng_);
}

std::size_t PathCoins::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  if (pos_ == path_.size()) path_.push_back({0, n});
  Step& s = path_[pos_++];
  if (s.arity != n) throw std::logic_error("outcome function is not deterministic");
  weight_ /= static_cast<double>(n);
  return s.choice;
}

bool PathCoins::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  if (pos_ == path_.size()) path_.push_back({0, 2});
  Step& s = path_[pos_++];
  if (s.arity != 2) throw std::logic_error("outcome function is not deterministic");
  bool heads = s.choice == 1;
  weight_ *= heads ? p : 1.0 - p;
  return heads;
}

PathCoins& OutcomeWalker::begin_path() {
  coins_.pos_ = 0;
  coins_.weight_ = 1.0;
  return coins_;
}

bool OutcomeWalker::advance() {
  auto& path = coins_.path_;
  // Drop steps the last run did not reach, then carry.
  path.resize(coins_.pos_);
  while (!path.empty() && path.back().choice + 1 == path.back().arity) {
    path.pop_back();
  }
  if (path.empty()) return false;
  ++path.back().choice;
  return true;
}

std::vector<int> sample_subset(Coins& coins, std::vector<int> pool,
                               std::size_t count) {
  if (count > pool.size()) throw std::invalid_argument("subset larger than pool");
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + coins.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> random_permutation(Coins& coins, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i + 1 < m; ++i) {
    int j = i + static_cast<int>(coins.below(m - i));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace degenlab
