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

// Set-Intersection and (multi-layer, boolean) hidden pointer chasing:
// instances, hard-distribution samplers, pointer evaluation and the simple
// upper-bound protocols.
//
// Indexing: universes X = {x_1..x_m} and Y = {y_1..y_m} are stored 0-based,
// so element i stands for x_{i+1} / y_{i+1}. The bit of an element is the
// parity of its 1-based index: bit(i) = (i + 1) % 2. Layers are stored
// 0-based as well; layer j of the chase (1-based) is families[j - 1].

#ifndef DEGENLAB_HPC_H_
#define DEGENLAB_HPC_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "degenlab/coins.h"
#include "degenlab/comm.h"

namespace degenlab {

using ElementSet = std::vector<int>;  // sorted, 0-based

inline int element_bit(int index0) { return (index0 + 1) % 2; }

// Sorted intersection of two sorted sets.
ElementSet intersect(const ElementSet& a, const ElementSet& b);

struct SetIntInstance {
  int m = 0;
  ElementSet x;
  ElementSet y;
};

// The unique common element; throws std::invalid_argument otherwise.
int intersection_element(const SetIntInstance& si);

// X', Y' disjoint uniform (m/4 - 1)-sets, e* uniform outside both,
// X = X' + e*, Y = Y' + e*. Requires m divisible by 4.
SetIntInstance sample_setint(int m, Coins& coins);
SetIntInstance sample_setint(int m, Rng& rng);

// Side marginal of the distribution above: a uniform (m/4)-subset.
ElementSet sample_setint_side(int m, Coins& coins);
// The other side conditioned on `given`: e* uniform in `given`, the rest a
// uniform (m/4 - 1)-subset of the complement.
ElementSet sample_setint_partner(int m, const ElementSet& given, Coins& coins);

struct MHPCInstance {
  int m = 0;
  int r = 0;
  // [layer][x] sets over Y for a and b; [layer][y] sets over X for c and d.
  std::vector<std::vector<ElementSet>> a, b, c, d;
};

// Checks shapes, ranges, sortedness and the unique-intersection promise on
// every pair (including the redundant families). Throws std::invalid_argument
// naming the offending pair.
void validate(const MHPCInstance& inst);

MHPCInstance sample_bmhpc(int m, int r, Coins& coins);
MHPCInstance sample_bmhpc(int m, int r, Rng& rng);
// One draw per coordinate, replicated across all r layers.
MHPCInstance sample_bhpc(int m, int r, Coins& coins);
MHPCInstance sample_bhpc(int m, int r, Rng& rng);

struct PointerPath {
  std::vector<int> z;  // z[0] = x_1; z[j] lies in X for even j, in Y for odd j
  int bit = 0;         // bit of z[r]
};

PointerPath chase(const MHPCInstance& inst);

// The worked 3-element, 3-layer example; redundant families are filled with
// equal singletons. Not valid for the samplers or the gadget (m = 3).
MHPCInstance figure_one_instance();

// Extends an instance to the next multiple of 4. Every new x gets
// A = B = {first new y} and every new y gets C = D = {first new x}; old sets
// are kept. The pointer path from x_1 never reaches the new elements.
MHPCInstance pad_to_multiple_of_four(const MHPCInstance& inst);

// {m, r, A, B, C, D}; each family is a flat list of r*m sorted lists,
// layer-major.
nlohmann::json to_json(const MHPCInstance& inst);
MHPCInstance instance_from_json(const nlohmann::json& j);

struct HpcRun {
  std::optional<int> bit;  // nullopt = abstain
  CommLedger ledger;
};

// Follows the pointers, one Set-Intersection per round: the holder (A for
// odd layers, C for even) sends an m-bit characteristic vector, its partner
// replies with the intersection index and broadcasts it. Throws unless the
// schedule is AB-first with inst.r rounds.
HpcRun aligned_protocol(const MHPCInstance& inst, const RoundSchedule& schedule);

// CD-first schedule with inst.r rounds on a BHPC instance. In round 1 the CD
// pair solves n_revealed uniformly chosen y-instances and broadcasts the
// (y, t_y) pairs. Afterwards the speaking pair solves its own instances and
// skips revealed ones for free, broadcasting (steps done, pointer) at the end
// of each round. Abstains if z_r is not reached within r rounds.
HpcRun misaligned_bhpc_protocol(const MHPCInstance& inst, int n_revealed, Rng& rng);

struct Embedding {
  MHPCInstance instance;
  int position = 0;  // I, 0-based
};

// Places (X, Y) at coordinate I of layer `layer` (1-based) in a fresh
// instance with `r` layers, drawing the rest with the public/private split:
// I, A^j_{<I}, B^j_{>I}, A^{<j}, B^{>j}, C, D from public coins; Alice's
// A^j_{>I} and A^{>j} and Bob's B^j_{<I} and B^{<j} conditionally from
// private coins.
Embedding embed_setint(const SetIntInstance& si, int layer, int r,
                       Coins& public_coins, Coins& alice_coins, Coins& bob_coins);

}  // namespace degenlab

#endif  // DEGENLAB_HPC_H_
