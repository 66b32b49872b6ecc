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

#include "degenlab/setint_measure.h"

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace degenlab {
namespace {

void require_enumerable(int m) {
  if (m < 4 || m > kMaxEnumerationM || m % 4 != 0) {
    throw std::invalid_argument("exhaustive enumeration supports m = 4 and m = 8 only");
  }
}

std::uint64_t hash_set(std::uint64_t seed, const ElementSet& s) {
  std::uint64_t h = splitmix64(seed);
  for (int e : s) h = splitmix64(h ^ static_cast<std::uint64_t>(e + 1));
  return h;
}

std::vector<double> normalized(std::vector<double> w) {
  double total = 0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

const ElementSet& side_of(const ProtocolOutcome& o, EpsMode mode) {
  static const ElementSet kNone;
  switch (mode) {
    case EpsMode::kInternalA:
      return o.x;
    case EpsMode::kInternalB:
      return o.y;
    case EpsMode::kExternal:
      break;
  }
  return kNone;
}

}  // namespace

std::vector<ProtocolOutcome> enumerate_protocol(const SetIntProtocol& protocol, int m) {
  require_enumerable(m);
  std::map<std::tuple<ElementSet, ElementSet, std::string>, double> joint;
  for_each_outcome(
      [&](Coins& coins) {
        SetIntInstance si = sample_setint(m, coins);
        std::string t = protocol(si.x, si.y, coins);
        return std::make_tuple(std::move(si.x), std::move(si.y), std::move(t));
      },
      [&](double w, auto& key) { joint[key] += w; });
  std::vector<ProtocolOutcome> out;
  out.reserve(joint.size());
  for (auto& [key, prob] : joint) {
    const auto& [x, y, t] = key;
    out.push_back({x, y, intersection_element({m, x, y}), t, prob});
  }
  return out;
}

DiscreteDistribution posterior_intersection(const SetIntProtocol& protocol, int m,
                                            const std::string& transcript, EpsMode mode,
                                            const ElementSet& known) {
  std::vector<double> w(m, 0.0);
  double total = 0;
  for (const auto& o : enumerate_protocol(protocol, m)) {
    if (o.transcript != transcript || side_of(o, mode) != known) continue;
    w[o.e_star] += o.prob;
    total += o.prob;
  }
  if (total <= 0) throw std::invalid_argument("conditioning event has probability zero");
  return DiscreteDistribution(normalized(std::move(w)));
}

double measure_eps_solving(const SetIntProtocol& protocol, int m, EpsMode mode) {
  const auto outcomes = enumerate_protocol(protocol, m);
  std::map<ElementSet, std::vector<double>> prior;
  std::map<std::pair<ElementSet, std::string>, std::vector<double>> post;
  for (const auto& o : outcomes) {
    const ElementSet& side = side_of(o, mode);
    auto& p = prior[side];
    auto& q = post[{side, o.transcript}];
    if (p.empty()) p.assign(m, 0.0);
    if (q.empty()) q.assign(m, 0.0);
    p[o.e_star] += o.prob;
    q[o.e_star] += o.prob;
  }
  double value = 0;
  for (auto& [key, w] : post) {
    double weight = 0;
    for (double x : w) weight += x;
    const DiscreteDistribution mu(normalized(w));
    const DiscreteDistribution nu(normalized(prior.at(key.first)));
    value += weight * triangular_discrimination(mu, nu);
  }
  return value;
}

SetIntProtocol silent_protocol() {
  return [](const ElementSet&, const ElementSet&, Coins&) { return std::string(); };
}

SetIntProtocol full_reveal_protocol() {
  return [](const ElementSet&, const ElementSet& y, Coins&) {
    std::string t;
    for (int e : y) t += std::to_string(e) + ",";
    return t;
  };
}

SetIntProtocol parity_protocol() {
  return [](const ElementSet& x, const ElementSet& y, Coins&) {
    const int e = intersect(x, y).at(0);
    return std::string(e % 2 == 0 ? "1" : "0");
  };
}

SetIntProtocol random_one_round_protocol(std::uint64_t seed, int alphabet, double noise) {
  if (alphabet < 1) throw std::invalid_argument("alphabet must be nonempty");
  return [=](const ElementSet& x, const ElementSet& y, Coins& coins) {
    const auto n = static_cast<std::uint64_t>(alphabet);
    auto a = hash_set(seed, x) % n;
    if (noise > 0 && coins.bernoulli(noise)) a = coins.below(n);
    auto b = hash_set(splitmix64(seed) + a, y) % n;
    if (noise > 0 && coins.bernoulli(noise)) b = coins.below(n);
    return std::to_string(a) + "|" + std::to_string(b);
  };
}

}  // namespace degenlab
