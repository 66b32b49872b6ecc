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

#include "degenlab/comm.h"

#include <algorithm>
#include <set>

namespace degenlab {

std::string_view party_name(Party p) {
  switch (p) {
    case Party::kA: return "A";
    case Party::kB: return "B";
    case Party::kC: return "C";
    case Party::kD: return "D";
    case Party::kPairAB: return "AB";
    case Party::kPairCD: return "CD";
  }
  return "?";
}

void CommLedger::record(Party from, Party to, std::size_t bits, bool cross_pair) {
  rounds_ = std::max(rounds_, 1);
  phases_ = std::max(phases_, 1);
  messages_.push_back({from, to, bits, cross_pair, phases_, rounds_});
  bits_total_ += bits;
}

void CommLedger::append(const CommLedger& other) {
  for (MessageRecord m : other.messages_) {
    m.phase += phases_;
    m.round += rounds_;
    messages_.push_back(m);
  }
  bits_total_ += other.bits_total_;
  rounds_ += other.rounds_;
  phases_ += other.phases_;
}

std::vector<std::size_t> CommLedger::per_phase() const {
  std::vector<std::size_t> out(phases_, 0);
  for (const auto& m : messages_) out[m.phase - 1] += m.bits;
  return out;
}

std::size_t CommLedger::cross_pair_bits() const {
  std::size_t total = 0;
  for (const auto& m : messages_) {
    if (m.cross_pair) total += m.bits;
  }
  return total;
}

std::size_t CommLedger::bits_sent_by(Party p) const {
  std::size_t total = 0;
  for (const auto& m : messages_) {
    if (m.from == p) total += m.bits;
  }
  return total;
}

nlohmann::json CommLedger::to_json() const {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : messages_) {
    messages.push_back({{"from", party_name(m.from)},
                        {"to", party_name(m.to)},
                        {"bits", m.bits}});
  }
  return {{"bits_total", bits_total_},
          {"rounds", rounds_},
          {"phases", phases_},
          {"messages", std::move(messages)}};
}

bool CommLedger::operator==(const CommLedger& other) const {
  if (bits_total_ != other.bits_total_ || rounds_ != other.rounds_ ||
      phases_ != other.phases_ || messages_.size() != other.messages_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < messages_.size(); ++i) {
    const auto& a = messages_[i];
    const auto& b = other.messages_[i];
    if (a.from != b.from || a.to != b.to || a.bits != b.bits ||
        a.cross_pair != b.cross_pair || a.phase != b.phase || a.round != b.round) {
      return false;
    }
  }
  return true;
}

EdgePartition make_partition(const Graph& g, std::vector<Edge> a,
                             std::vector<Edge> b) {
  Graph ga(g.num_vertices(), std::move(a));
  Graph gb(g.num_vertices(), std::move(b));
  std::vector<Edge> both;
  std::set_intersection(ga.edges().begin(), ga.edges().end(), gb.edges().begin(),
                        gb.edges().end(), std::back_inserter(both));
  if (!both.empty()) {
    throw std::invalid_argument("edge sets of the two parties overlap");
  }
  std::vector<Edge> all;
  std::merge(ga.edges().begin(), ga.edges().end(), gb.edges().begin(),
             gb.edges().end(), std::back_inserter(all));
  if (all != g.edges()) {
    throw std::invalid_argument("edge sets do not cover the base graph");
  }
  return {g, std::move(ga), std::move(gb)};
}

EdgePartition random_partition(const Graph& g, Rng& rng, double p_alice) {
  std::bernoulli_distribution coin(p_alice);
  std::vector<Edge> a, b;
  for (const Edge& e : g.edges()) (coin(rng) ? a : b).push_back(e);
  return make_partition(g, std::move(a), std::move(b));
}

EdgePartition alternating_partition(const Graph& g) {
  std::vector<Edge> a, b;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    (i % 2 == 0 ? a : b).push_back(g.edges()[i]);
  }
  return make_partition(g, std::move(a), std::move(b));
}

}  // namespace degenlab
