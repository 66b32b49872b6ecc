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

#include <numeric>
#include <stdexcept>

#include "degenlab/hpc.h"

namespace degenlab {
namespace {

using Task = PartyTask<std::optional<int>>;

BitString characteristic_vector(const ElementSet& s, int m) {
  std::vector<char> in(m, 0);
  for (int e : s) in[e] = 1;
  BitWriter w;
  for (int e = 0; e < m; ++e) w.write_bit(in[e]);
  return w.take();
}

// The partner's side of one Set-Intersection: the unique element of `mine`
// marked in the received characteristic vector.
int resolve(const BitString& vec, const ElementSet& mine, int m) {
  if (static_cast<int>(vec.size()) != m) throw ProtocolError("bad characteristic vector");
  int found = -1;
  for (int e : mine) {
    if (vec[e]) {
      if (found >= 0) throw ProtocolError("intersection is not a single element");
      found = e;
    }
  }
  if (found < 0) throw ProtocolError("intersection is empty");
  return found;
}

BitString encode_index(int value, int bound) {
  BitWriter w;
  w.write_bounded(value, bound);
  return w.take();
}

int decode_index(const BitString& bits, int bound) {
  BitReader r(bits);
  return static_cast<int>(r.read_bounded(bound));
}

Task aligned_party(const MHPCInstance* inst, Party self) {
  const int m = inst->m;
  int z = 0;
  for (int j = 1; j <= inst->r; ++j) {
    const bool ab = j % 2 == 1;
    const Party holder = ab ? Party::kA : Party::kC;
    const Party partner = ab ? Party::kB : Party::kD;
    if (self == holder) {
      const ElementSet& mine = (ab ? inst->a : inst->c)[j - 1][z];
      co_yield to_peer(characteristic_vector(mine, m));
      z = decode_index((co_await next_message).bits, m);
      co_await next_message;  // partner's broadcast of the same index
    } else if (self == partner) {
      BitString vec = (co_await next_message).bits;
      const ElementSet& mine = (ab ? inst->b : inst->d)[j - 1][z];
      z = resolve(vec, mine, m);
      co_yield to_peer(encode_index(z, m));
      co_yield to_other_pair(encode_index(z, m));
    } else {
      z = decode_index((co_await next_message).bits, m);
    }
  }
  co_return std::optional<int>(element_bit(z));
}

Task misaligned_party(const MHPCInstance* inst, Party self,
                      const std::vector<int>* chosen) {
  const int m = inst->m;
  const int r = inst->r;
  std::vector<int> revealed(m, -1);  // y -> t_y for pre-solved y-instances

  // Round 1: the CD pair pre-solves the chosen y-instances.
  if (self == Party::kC) {
    for (int y : *chosen) {
      co_yield to_peer(characteristic_vector(inst->c[0][y], m));
      revealed[y] = decode_index((co_await next_message).bits, m);
    }
    co_await next_message;
  } else if (self == Party::kD) {
    BitWriter list;
    list.write_bounded(chosen->size(), m + 1);
    for (int y : *chosen) {
      BitString vec = (co_await next_message).bits;
      const int t = resolve(vec, inst->d[0][y], m);
      revealed[y] = t;
      co_yield to_peer(encode_index(t, m));
      list.write_bounded(y, m);
      list.write_bounded(t, m);
    }
    co_yield to_other_pair(list.take());
  } else {
    BitString msg = (co_await next_message).bits;
    BitReader rd(msg);
    const auto count = rd.read_bounded(m + 1);
    for (std::uint64_t i = 0; i < count; ++i) {
      const int y = static_cast<int>(rd.read_bounded(m));
      revealed[y] = static_cast<int>(rd.read_bounded(m));
    }
  }

  int steps = 0;  // pointers known so far: z_0..z_steps
  int z = 0;
  for (int t = 2; t <= r; ++t) {
    const bool ab_round = t % 2 == 0;
    const Party holder = ab_round ? Party::kA : Party::kC;
    const Party partner = ab_round ? Party::kB : Party::kD;
    if (self != holder && self != partner) {
      BitString msg = (co_await next_message).bits;
      BitReader rd(msg);
      steps = static_cast<int>(rd.read_bounded(r + 1));
      z = static_cast<int>(rd.read_bounded(m));
      continue;
    }
    while (steps < r) {
      const int layer = steps + 1;
      const bool ab_layer = layer % 2 == 1;
      if (!ab_layer && revealed[z] >= 0) {
        z = revealed[z];
        ++steps;
        continue;
      }
      if (ab_layer != ab_round) break;
      if (self == holder) {
        const ElementSet& mine = (ab_layer ? inst->a : inst->c)[layer - 1][z];
        co_yield to_peer(characteristic_vector(mine, m));
        z = decode_index((co_await next_message).bits, m);
      } else {
        BitString vec = (co_await next_message).bits;
        z = resolve(vec, (ab_layer ? inst->b : inst->d)[layer - 1][z], m);
        co_yield to_peer(encode_index(z, m));
      }
      ++steps;
    }
    if (self == partner) {
      BitWriter w;
      w.write_bounded(steps, r + 1);
      w.write_bounded(z, m);
      co_yield to_other_pair(w.take());
    } else {
      co_await next_message;
    }
  }
  if (steps < r) co_return std::optional<int>();
  co_return std::optional<int>(element_bit(z));
}

bool layers_identical(const MHPCInstance& inst) {
  for (int j = 1; j < inst.r; ++j) {
    if (inst.a[j] != inst.a[0] || inst.b[j] != inst.b[0] || inst.c[j] != inst.c[0] ||
        inst.d[j] != inst.d[0]) {
      return false;
    }
  }
  return true;
}

}  // namespace

HpcRun aligned_protocol(const MHPCInstance& inst, const RoundSchedule& schedule) {
  validate(inst);
  if (schedule.starter != Pair::kAB) {
    throw std::invalid_argument("aligned protocol needs an AB-first schedule");
  }
  if (schedule.rounds != inst.r) {
    throw std::invalid_argument("aligned protocol needs exactly r rounds");
  }
  auto result = run_four_party<std::optional<int>>(
      schedule, {aligned_party(&inst, Party::kA), aligned_party(&inst, Party::kB),
                 aligned_party(&inst, Party::kC), aligned_party(&inst, Party::kD)});
  return {result.output, std::move(result.ledger)};
}

HpcRun misaligned_bhpc_protocol(const MHPCInstance& inst, int n_revealed, Rng& rng) {
  validate(inst);
  if (!layers_identical(inst)) {
    throw std::invalid_argument("misaligned protocol needs a BHPC instance");
  }
  if (n_revealed < 0 || n_revealed > inst.m) {
    throw std::invalid_argument("number of pre-solved instances must be in [0, m]");
  }
  std::vector<int> all(inst.m);
  std::iota(all.begin(), all.end(), 0);
  RngCoins coins(rng);
  const std::vector<int> chosen = sample_subset(coins, std::move(all), n_revealed);
  RoundSchedule schedule{inst.r, Pair::kCD};
  auto result = run_four_party<std::optional<int>>(
      schedule, {misaligned_party(&inst, Party::kA, &chosen),
                 misaligned_party(&inst, Party::kB, &chosen),
                 misaligned_party(&inst, Party::kC, &chosen),
                 misaligned_party(&inst, Party::kD, &chosen)});
  return {result.output, std::move(result.ledger)};
}

}  // namespace degenlab
