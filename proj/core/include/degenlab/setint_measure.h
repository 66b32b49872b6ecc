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

// Exact posterior and epsilon-solving measurements for Set-Intersection
// protocols, by enumerating every input of the hard distribution together
// with every coin path of the protocol. Desk scale only: m <= 8.

#ifndef DEGENLAB_SETINT_MEASURE_H_
#define DEGENLAB_SETINT_MEASURE_H_

#include <functional>
#include <string>
#include <vector>

#include "degenlab/coins.h"
#include "degenlab/hpc.h"
#include "degenlab/info.h"

namespace degenlab {

// The full transcript (public coins included) as a function of the inputs
// and the protocol's coins. Must be deterministic given the coins it draws.
using SetIntProtocol =
    std::function<std::string(const ElementSet& x, const ElementSet& y, Coins& coins)>;

enum class EpsMode { kInternalA, kInternalB, kExternal };

inline constexpr int kMaxEnumerationM = 8;

struct ProtocolOutcome {
  ElementSet x;
  ElementSet y;
  int e_star = 0;
  std::string transcript;
  double prob = 0;
};

// The joint distribution of (X, Y, transcript), merged over coin paths.
std::vector<ProtocolOutcome> enumerate_protocol(const SetIntProtocol& protocol, int m);

// Posterior of e* given the transcript and, for the internal modes, the
// known side's input. Throws if m > 8 or the event has probability zero.
DiscreteDistribution posterior_intersection(const SetIntProtocol& protocol, int m,
                                            const std::string& transcript, EpsMode mode,
                                            const ElementSet& known = {});

// E[Lambda(mu(e* | transcript, side), mu(e* | side))]; the side is dropped in
// external mode.
double measure_eps_solving(const SetIntProtocol& protocol, int m, EpsMode mode);

// Reference protocols.
SetIntProtocol silent_protocol();
// Bob announces Y.
SetIntProtocol full_reveal_protocol();
// One bit: whether e* has an even 0-based index.
SetIntProtocol parity_protocol();
// Alice sends f(X) with f drawn from `seed` into `alphabet` symbols, Bob
// answers g(Y, f(X)) likewise. Independent private coin flips with
// probability `noise` replace each message by a uniform symbol.
SetIntProtocol random_one_round_protocol(std::uint64_t seed, int alphabet, double noise);

}  // namespace degenlab

#endif  // DEGENLAB_SETINT_MEASURE_H_
