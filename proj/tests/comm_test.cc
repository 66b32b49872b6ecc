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

#include <array>

#include <gtest/gtest.h>

#include "degenlab/comm.h"
#include "degenlab/setint_measure.h"

namespace degenlab {
namespace {

PartyTask<int> send_degrees(std::vector<int> degrees, int n) {
  BitWriter w;
  for (int d : degrees) w.write_bounded(d, n);
  co_yield to_peer(w.take());
  Incoming ok = co_await next_message;
  co_return ok.bits[0] ? 1 : 0;
}

PartyTask<int> reply_ok(int n) {
  Incoming msg = co_await next_message;
  BitReader r(msg.bits);
  for (int i = 0; i < n; ++i) r.read_bounded(n);
  BitString ok;
  ok.push_back(r.at_end());
  co_yield to_peer(ok);
  co_return r.at_end() ? 1 : 0;
}

PartyTask<int> constant(int v) { co_return v; }

PartyTask<int> listen_then(int v) {
  co_await next_message;
  co_return v;
}

PartyTask<int> broadcast_bit(bool bit) {
  BitString b;
  b.push_back(bit);
  co_yield to_other_pair(b);
  co_return 7;
}

TEST(TwoParty, DegreesThenOk) {
  for (int n : {4, 8, 10, 64}) {
    std::vector<int> degrees(n, 1);
    auto run = run_two_party(send_degrees(degrees, n), reply_ok(n));
    EXPECT_EQ(run.output, 1);
    EXPECT_EQ(run.ledger.bits_total(),
              static_cast<std::size_t>(n * ceil_log2(n) + 1));
    EXPECT_EQ(run.ledger.rounds(), 2);
    EXPECT_EQ(run.ledger.messages().size(), 2u);
  }
}

TEST(TwoParty, SilentProtocol) {
  auto run = run_two_party(constant(3), constant(3));
  EXPECT_EQ(run.output, 3);
  EXPECT_EQ(run.ledger.bits_total(), 0u);
}

TEST(TwoParty, DisagreementAndDeadlock) {
  EXPECT_THROW(run_two_party(constant(1), constant(2)), ProtocolError);
  EXPECT_THROW(run_two_party(listen_then(1), listen_then(1)), ProtocolError);
}

TEST(FourParty, SingleBroadcast) {
  auto run = run_four_party<int>({1, Pair::kAB}, {broadcast_bit(true), listen_then(7),
                                                  listen_then(7), listen_then(7)});
  EXPECT_EQ(run.output, 7);
  EXPECT_EQ(run.ledger.bits_total(), 1u);
  EXPECT_EQ(run.ledger.rounds(), 1);
  EXPECT_EQ(run.ledger.cross_pair_bits(), 1u);
  EXPECT_EQ(run.ledger.messages()[0].to, Party::kPairCD);
}

TEST(FourParty, OutOfScheduleSpeakerIsRejected) {
  // C speaks in a round that belongs to AB.
  EXPECT_THROW(run_four_party<int>({1, Pair::kAB}, {listen_then(7), listen_then(7),
                                                    broadcast_bit(false), listen_then(7)}),
               ProtocolError);
}

TEST(FourParty, ScheduleAlternates) {
  RoundSchedule s{4, Pair::kCD};
  EXPECT_EQ(s.speaker(1), Pair::kCD);
  EXPECT_EQ(s.speaker(2), Pair::kAB);
  EXPECT_EQ(s.speaker(3), Pair::kCD);
}

// When CD speaks first, its message is a function of data independent of
// the first AB pair, so an observer's posterior on z_1 stays the prior.
TEST(FourParty, CdFirstRoundCarriesNoInformationOnFirstPointer) {
  SetIntProtocol cd_message = [](const ElementSet&, const ElementSet&, Coins& coins) {
    return std::to_string(coins.below(3));
  };
  for (const auto& o : enumerate_protocol(cd_message, 4)) {
    DiscreteDistribution post =
        posterior_intersection(cd_message, 4, o.transcript, EpsMode::kExternal);
    for (int e = 0; e < 4; ++e) EXPECT_NEAR(post[e], 0.25, 1e-12);
  }
}

TEST(Ledger, AppendRenumbers) {
  CommLedger a;
  a.begin_phase();
  a.record(Party::kA, Party::kB, 5);
  CommLedger b;
  b.begin_phase();
  b.record(Party::kB, Party::kA, 3, true);
  b.begin_phase();
  b.record(Party::kA, Party::kB, 2);
  a.append(b);
  EXPECT_EQ(a.phases(), 3);
  EXPECT_EQ(a.bits_total(), 10u);
  EXPECT_EQ(a.per_phase(), (std::vector<std::size_t>{5, 3, 2}));
  EXPECT_EQ(a.cross_pair_bits(), 3u);
  EXPECT_EQ(a.intra_pair_bits(), 7u);
  EXPECT_EQ(a.bits_sent_by(Party::kA), 7u);
  EXPECT_EQ(a.to_json()["messages"].size(), 3u);
}

TEST(Ledger, RecordWithoutPhaseLandsInPhaseOne) {
  CommLedger l;
  l.record(Party::kC, Party::kD, 4);
  EXPECT_EQ(l.phases(), 1);
  EXPECT_EQ(l.rounds(), 1);
}

TEST(Partition, CoversAndSeparates) {
  Rng rng(2);
  Graph g = gnp_graph(30, 0.3, rng);
  EdgePartition p = random_partition(g, rng);
  EXPECT_EQ(p.alice.num_edges() + p.bob.num_edges(), g.num_edges());
  for (auto [u, v] : p.alice.edges()) EXPECT_FALSE(p.bob.has_edge(u, v));
  EdgePartition alt = alternating_partition(g);
  EXPECT_EQ(alt.alice.num_edges(), (g.num_edges() + 1) / 2);
  EXPECT_THROW(make_partition(g, g.edges(), {g.edges()[0]}), std::invalid_argument);
  EXPECT_THROW(make_partition(g, {}, {}), std::invalid_argument);
}

}  // namespace
}  // namespace degenlab
