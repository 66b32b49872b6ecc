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

// Randomness. Samplers draw through the Coins interface rather than a raw
// engine, so the same sampler code can run on a seeded generator or be
// enumerated exhaustively over every outcome (for_each_outcome).

#ifndef DEGENLAB_COINS_H_
#define DEGENLAB_COINS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace degenlab {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Seed for the `stream`-th independent generator derived from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Coins {
 public:
  virtual ~Coins() = default;
  // Uniform in [0, n); n >= 1.
  virtual std::size_t below(std::size_t n) = 0;
  virtual bool bernoulli(double p) = 0;
};

class RngCoins final : public Coins {
 public:
  explicit RngCoins(Rng& rng) : rng_(&rng) {}
  std::size_t below(std::size_t n) override;
  bool bernoulli(double p) override;

 private:
  Rng* rng_;
};

// Replays one fixed path through the outcome tree; used by for_each_outcome.
class PathCoins final : public Coins {
 public:
  std::size_t below(std::size_t n) override;
  bool bernoulli(double p) override;

 private:
  friend class OutcomeWalker;
  struct Step {
    std::size_t choice;
    std::size_t arity;
  };
  std::vector<Step> path_;
  std::size_t pos_ = 0;
  double weight_ = 1.0;
};

class OutcomeWalker {
 public:
  PathCoins& begin_path();
  double weight() const { return coins_.weight_; }
  // Moves to the next unexplored path; false when the tree is exhausted.
  bool advance();

 private:
  PathCoins coins_;
};

// Calls fn(coins) once per distinct outcome path and visit(weight, result)
// with the probability of that path. fn must be deterministic given the
// coins it draws. Zero-probability branches are skipped.
template <class Fn, class Visit>
void for_each_outcome(Fn&& fn, Visit&& visit) {
  OutcomeWalker walker;
  do {
    Coins& coins = walker.begin_path();
    auto result = fn(coins);
    visit(walker.weight(), result);
  } while (walker.advance());
}

// Uniformly random `count`-subset of `pool`, returned sorted.
std::vector<int> sample_subset(Coins& coins, std::vector<int> pool,
                               std::size_t count);

// Uniformly random permutation of 0..m-1 (Fisher-Yates).
std::vector<int> random_permutation(Coins& coins, int m);

}  // namespace degenlab

#endif  // DEGENLAB_COINS_H_
