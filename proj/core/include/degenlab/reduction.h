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

// End-to-end checks of the gadget reduction: the degeneracy split around
// d - 3 and the block structure of the peeling order.

#ifndef DEGENLAB_REDUCTION_H_
#define DEGENLAB_REDUCTION_H_

#include <array>
#include <vector>

#include <nlohmann/json.hpp>

#include "degenlab/gadget.h"
#include "degenlab/graph.h"
#include "degenlab/hpc.h"

namespace degenlab {

struct TraceBlock {
  int ell = 0;
  bool ok = true;
  int max_degree_at_removal = 0;
  std::vector<Vertex> expected;  // Z_ell, sorted
  std::vector<Vertex> peeled;    // peels 3*ell+1..3*ell+3, sorted
  // Residual degrees when the block starts.
  int special_degree = 0;
  int min_aux_degree = 0;
};

struct ReductionReport {
  int bit_true = 0;
  int kappa = 0;
  int d = 0;
  bool split_ok = false;
  std::vector<TraceBlock> trace;
  bool trace_ok = true;
  // Bit-1 instances only: peels 6r+4..6r+6 are the special nodes.
  bool special_peel_ok = true;
  // Filled by the streaming harness; zero otherwise.
  int phases = 0;
  std::size_t max_state_bits = 0;
  std::size_t bits_total = 0;

  nlohmann::json to_json() const;
};

// The triple of z_{ceil(ell/2)} in layer ell.
std::array<Vertex, 3> pointer_triple(const GadgetShape& shape, const PointerPath& path,
                                     int ell);

// Builds the gadget and compares its degeneracy with the answer bit.
ReductionReport verify_split(const MHPCInstance& inst);

// Peels the gadget under `options` and checks, block by block, that the first
// 6r + 3 removals are the pointer triples in layer order at residual degree
// <= d - 3, with special degree d + 6r - 3*ell and aux degree at least
// d + 6r + 3 - 3*ell at each block boundary. Failures are reported, not
// thrown.
ReductionReport trace_invariants(const MHPCInstance& inst, const PeelOptions& options = {});

}  // namespace degenlab

#endif  // DEGENLAB_REDUCTION_H_
