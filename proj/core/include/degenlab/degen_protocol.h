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

// Two-party protocols deciding whether kappa(E_A u E_B) <= k, and a binary
// search on top of them.
//
// Both deciders simulate min-id peeling over a shared "ready" set D. They
// differ in how residual degrees of the other live vertices are kept in sync:
//  * sqrt: every ceil(sqrt n) deletions the parties exchange all degrees;
//    in between only neighbors in the low band L = [k+1, k+s] are reported.
//  * fast: vertex u with known degree in [k + 2^(i-1), k + 2^i) sits in
//    bucket i, and is re-synced once either party's private degree has
//    dropped by max(1, 2^(i-2)) since that party last reported it.
//
// Wire format (w = width_for(n), lists carry a width_for(n+1) length prefix):
//  setup:   Alice sends n degrees, then Bob sends n degrees.
//  sqrt:    per deletion Alice sends N_A(v) & L, then Bob sends N_B(v) & L.
//  fast:    per deletion Alice sends her triggered list of (u, deg_A(u));
//           Bob answers with deg_B(u) for each of those (no prefix) plus his
//           own extra list of (u, deg_B(u)); if that list is nonempty Alice
//           answers with deg_A(u) for each extra vertex.

#ifndef DEGENLAB_DEGEN_PROTOCOL_H_
#define DEGENLAB_DEGEN_PROTOCOL_H_

#include <vector>

#include <nlohmann/json.hpp>

#include "degenlab/comm.h"
#include "degenlab/graph.h"

namespace degenlab {

// Hooks for tests; only Alice's copy of the state reports.
class DecisionObserver {
 public:
  virtual ~DecisionObserver() = default;
  // v entered D with exactly known degree `known_degree`.
  virtual void on_ready(Vertex v, int known_degree) { (void)v, (void)known_degree; }
  virtual void on_delete(Vertex v) { (void)v; }
  // sqrt only: a block of deletions starts with the given safe set.
  virtual void on_block_start(const std::vector<Vertex>& safe) { (void)safe; }
};

struct DecideOptions {
  // Deletion priority inside D (smaller first); empty means vertex id.
  std::vector<int> priority;
  DecisionObserver* observer = nullptr;
};

struct DecisionRun {
  Decision decision;
  CommLedger ledger;
  // fast only: how many times each vertex's degree was re-communicated
  // after setup. Zeros for sqrt.
  std::vector<int> updates;

  int updates_max() const;
};

DecisionRun degen_decide_sqrt(const EdgePartition& p, int k,
                              const DecideOptions& options = {});
DecisionRun degen_decide_fast(const EdgePartition& p, int k,
                              const DecideOptions& options = {});

enum class ProtocolKind { kFast, kSqrt };

struct SearchResult {
  int kappa = 0;
  VertexOrdering ordering;    // a kappa-ordering
  std::vector<Vertex> core;   // a kappa-core
  CommLedger ledger;          // all decision runs, one phase each
  int decision_runs = 0;
  std::size_t max_run_bits = 0;
  int updates_max = 0;
};

SearchResult degen_search(const EdgePartition& p,
                          ProtocolKind kind = ProtocolKind::kFast);

// {decision, k, kappa, bits_total, updates_per_vertex_max}
nlohmann::json decision_json(const DecisionRun& run, int k, int kappa);

}  // namespace degenlab

#endif  // DEGENLAB_DEGEN_PROTOCOL_H_
