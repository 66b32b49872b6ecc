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

// Multi-pass streaming algorithms and the four-player simulation that feeds
// the gadget to one of them, pass by pass, in the order C, D, A, B.

#ifndef DEGENLAB_STREAMING_H_
#define DEGENLAB_STREAMING_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "degenlab/bits.h"
#include "degenlab/comm.h"
#include "degenlab/hpc.h"
#include "degenlab/reduction.h"

namespace degenlab {

class StreamingAlgorithm {
 public:
  virtual ~StreamingAlgorithm() = default;

  virtual void init(int n) = 0;
  virtual void begin_pass() = 0;
  virtual void process_edge(Vertex u, Vertex v) = 0;
  // Returns whether another pass is wanted.
  virtual bool end_pass() = 0;
  // Whether the streamed graph has degeneracy at most k.
  virtual bool finalize(int k) = 0;

  // The complete state; restore() on a fresh init()ed instance resumes it.
  virtual BitString snapshot() const = 0;
  virtual void restore(const BitString& state) = 0;
};

using StreamingFactory = std::function<std::unique_ptr<StreamingAlgorithm>()>;

// Keeps every edge; one pass.
std::unique_ptr<StreamingAlgorithm> make_store_all();
// Recounts residual degrees of live vertices each pass and deletes one
// minimum-degree vertex (smallest id) at the end of it.
std::unique_ptr<StreamingAlgorithm> make_naive_peeler();

struct StreamingRun {
  int bit = 0;
  int passes = 0;
  int phases = 0;
  std::size_t max_state_bits = 0;
  std::size_t state_bits_total = 0;  // over all handoffs
  std::size_t degree_table_bits = 0;
  bool edge_order_consistent = true;
  CommLedger ledger;
};

// Runs the simulation with at most `max_passes` passes, handing the state to
// a freshly built algorithm at every player change. Pass 1 also carries
// degree tables (n values of width_for(n) bits) on C->D, D->A and A->B so
// that B can derive the aux edges. Phases are the cross-pair handoffs, so a
// p-pass run has 2p - 1. The answer is finalize(d - 3). Throws
// std::runtime_error if the algorithm wants more than max_passes passes.
StreamingRun simulate_streaming_reduction(const MHPCInstance& inst,
                                          const StreamingFactory& factory,
                                          int max_passes);

// verify_split plus the streaming fields of the report.
ReductionReport streaming_report(const MHPCInstance& inst, const StreamingRun& run);

}  // namespace degenlab

#endif  // DEGENLAB_STREAMING_H_
