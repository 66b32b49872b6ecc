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

#include <gtest/gtest.h>

#include "degenlab/reduction.h"
#include "degenlab/streaming.h"
#include "oracles.h"

namespace degenlab {
namespace {

// A BMHPC sample with a prescribed answer bit, by rejection.
MHPCInstance sample_with_bit(int m, int r, int bit, Rng& rng) {
  for (;;) {
    MHPCInstance inst = sample_bmhpc(m, r, rng);
    if (chase(inst).bit == bit) return inst;
  }
}

TEST(Split, KappaAgainstIndependentPeel) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    MHPCInstance inst = sample_bmhpc(4, 1, rng);
    ReductionReport rep = verify_split(inst);
    GadgetGraph g = build_gadget(inst);
    EXPECT_EQ(rep.kappa, oracle::naive_peel_degeneracy(g.graph));
    EXPECT_EQ(rep.bit_true, chase(inst).bit);
    EXPECT_TRUE(rep.split_ok);
    if (rep.bit_true == 1) {
      EXPECT_LE(rep.kappa, rep.d - 3);
    } else {
      EXPECT_GE(rep.kappa, rep.d - 2);
    }
  }
}

TEST(Split, LargerShapes) {
  Rng rng(2);
  for (auto [m, r] : {std::pair{4, 2}, std::pair{8, 3}}) {
    for (int t = 0; t < 10; ++t) {
      EXPECT_TRUE(verify_split(sample_bmhpc(m, r, rng)).split_ok) << m << "," << r;
    }
  }
}

TEST(Split, EditOffThePathKeepsKappa) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    MHPCInstance inst = sample_bmhpc(8, 1, rng);
    const int z1 = chase(inst).z[1];
    ReductionReport before = verify_split(inst);
    // Re-sample the pair at x_2, which the pointer never visits when r = 1.
    MHPCInstance edited = inst;
    SetIntInstance fresh = sample_setint(8, rng);
    edited.a[0][1] = fresh.x;
    edited.b[0][1] = fresh.y;
    ReductionReport after = verify_split(edited);
    EXPECT_EQ(chase(edited).z[1], z1);
    EXPECT_TRUE(after.split_ok);
    EXPECT_EQ(after.kappa, before.kappa);
  }
}

TEST(Trace, PaddedFigureOne) {
  MHPCInstance inst = pad_to_multiple_of_four(figure_one_instance());
  ReductionReport rep = trace_invariants(inst);
  EXPECT_TRUE(rep.trace_ok);
  ASSERT_EQ(rep.trace.size(), 7u);
  GadgetShape s{4, 3};
  auto first = s.triple(0, 0);
  EXPECT_EQ(rep.trace[0].peeled, std::vector<Vertex>(first.begin(), first.end()));
  EXPECT_EQ(rep.bit_true, 1);
  EXPECT_TRUE(rep.special_peel_ok);
}

TEST(Trace, StructuredPeelsAtSmallestShape) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    MHPCInstance inst = sample_bmhpc(4, 1, rng);
    ReductionReport rep = trace_invariants(inst, {TieBreak::kRandom, static_cast<std::uint64_t>(t)});
    ASSERT_TRUE(rep.trace_ok) << rep.to_json().dump();
    ASSERT_EQ(rep.trace.size(), 3u);
    PointerPath path = chase(inst);
    for (const TraceBlock& b : rep.trace) {
      auto z = pointer_triple(GadgetShape{4, 1}, path, b.ell);
      EXPECT_EQ(b.expected, std::vector<Vertex>(z.begin(), z.end()));
      EXPECT_EQ(b.peeled, b.expected);
      EXPECT_LE(b.max_degree_at_removal, rep.d - 3);
      EXPECT_EQ(b.special_degree, rep.d + 6 - 3 * b.ell);
    }
  }
}

TEST(Trace, SpecialsFollowOnBitOne) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    MHPCInstance inst = sample_with_bit(8, 2, 1, rng);
    ReductionReport rep = trace_invariants(inst);
    EXPECT_TRUE(rep.trace_ok);
    EXPECT_TRUE(rep.special_peel_ok);
  }
}

TEST(Report, JsonKeys) {
  Rng rng(6);
  auto j = trace_invariants(sample_bmhpc(4, 1, rng)).to_json();
  for (const char* key : {"bit_true", "kappa", "d", "split_ok", "trace", "phases",
                          "max_state_bits", "bits_total"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["trace"].size(), 3u);
}

TEST(Streaming, StoreAllIsOnePhase) {
  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    MHPCInstance inst = sample_bmhpc(4, 1, rng);
    StreamingRun run = simulate_streaming_reduction(inst, make_store_all, 1);
    EXPECT_EQ(run.bit, chase(inst).bit);
    EXPECT_EQ(run.passes, 1);
    EXPECT_EQ(run.phases, 1);
    EXPECT_EQ(run.ledger.bits_total(), run.state_bits_total + run.degree_table_bits);
  }
}

TEST(Streaming, NaivePeelerAccounting) {
  Rng rng(8);
  for (int bit : {0, 1}) {
    MHPCInstance inst = sample_with_bit(4, 1, bit, rng);
    const int n = GadgetShape{4, 1}.num_vertices();
    StreamingRun run = simulate_streaming_reduction(inst, make_naive_peeler, n);
    EXPECT_EQ(run.bit, bit);
    EXPECT_EQ(run.passes, n);
    EXPECT_EQ(run.phases, 2 * run.passes - 1);
    EXPECT_EQ(run.ledger.phases(), run.phases);
    EXPECT_TRUE(run.edge_order_consistent);
    EXPECT_EQ(run.ledger.bits_total(), run.state_bits_total + run.degree_table_bits);
    // Three tables on pass 1, n values of width_for(n) each.
    EXPECT_EQ(run.degree_table_bits, static_cast<std::size_t>(3 * n * width_for(n)));
    EXPECT_LE(run.max_state_bits, static_cast<std::size_t>(n * (2 + 2 * width_for(n))));
    ReductionReport rep = streaming_report(inst, run);
    EXPECT_EQ(rep.phases, run.phases);
    EXPECT_EQ(rep.bits_total, run.ledger.bits_total());
  }
}

TEST(Streaming, PassBudgetIsEnforced) {
  Rng rng(9);
  MHPCInstance inst = sample_bmhpc(4, 1, rng);
  EXPECT_THROW(simulate_streaming_reduction(inst, make_naive_peeler, 5), std::runtime_error);
}

TEST(Streaming, NaivePeelerSnapshotResumes) {
  Graph g = petersen_graph();
  auto a = make_naive_peeler();
  a->init(g.num_vertices());
  int passes = 0;
  bool more = true;
  while (more) {
    a->begin_pass();
    for (auto [u, v] : g.edges()) a->process_edge(u, v);
    more = a->end_pass();
    ++passes;
    // Hand the state to a fresh instance every pass.
    auto b = make_naive_peeler();
    b->init(g.num_vertices());
    b->restore(a->snapshot());
    EXPECT_EQ(b->snapshot(), a->snapshot());
    a = std::move(b);
  }
  EXPECT_EQ(passes, g.num_vertices());
  EXPECT_TRUE(a->finalize(3));
  EXPECT_FALSE(a->finalize(2));
}

}  // namespace
}  // namespace degenlab
