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

// Message-passing simulation with exact bit accounting.
//
// A party is a coroutine returning PartyTask<Out>. It sends with
//   co_yield to_peer(bits);        // partner (the other party in 2-party runs)
//   co_yield to_other_pair(bits);  // 4-party cross-pair broadcast
// and receives with
//   Incoming msg = co_await next_message;
// The engines below interleave the parties, charge every message to a
// CommLedger, detect deadlocks and schedule violations, and check that all
// parties return the same output.

#ifndef DEGENLAB_COMM_H_
#define DEGENLAB_COMM_H_

#include <array>
#include <coroutine>
#include <cstddef>
#include <deque>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "degenlab/bits.h"
#include "degenlab/coins.h"
#include "degenlab/graph.h"

namespace degenlab {

enum class Party { kA, kB, kC, kD, kPairAB, kPairCD };
std::string_view party_name(Party p);

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MessageRecord {
  Party from;
  Party to;
  std::size_t bits;
  bool cross_pair;
  int phase;
  int round;
};

class CommLedger {
 public:
  // Rounds and phases are 1-based counters; a record belongs to the current
  // ones. Messages recorded before any begin_* call land in round/phase 1.
  void begin_round() { ++rounds_; }
  void begin_phase() { ++phases_; }

  void record(Party from, Party to, std::size_t bits, bool cross_pair = false);
  // Concatenates another run; its phases and rounds are renumbered after ours.
  void append(const CommLedger& other);

  std::size_t bits_total() const { return bits_total_; }
  int rounds() const { return rounds_; }
  int phases() const { return phases_; }
  const std::vector<MessageRecord>& messages() const { return messages_; }
  std::vector<std::size_t> per_phase() const;
  std::size_t cross_pair_bits() const;
  std::size_t intra_pair_bits() const { return bits_total_ - cross_pair_bits(); }
  std::size_t bits_sent_by(Party p) const;

  nlohmann::json to_json() const;

  bool operator==(const CommLedger&) const;

 private:
  std::vector<MessageRecord> messages_;
  std::size_t bits_total_ = 0;
  int rounds_ = 0;
  int phases_ = 0;
};

struct EdgePartition {
  Graph base;
  Graph alice;  // (V, E_A)
  Graph bob;    // (V, E_B)
};

// Throws std::invalid_argument unless a and b are disjoint and cover g.
EdgePartition make_partition(const Graph& g, std::vector<Edge> a,
                             std::vector<Edge> b);
// Each edge goes to Alice with probability p_alice.
EdgePartition random_partition(const Graph& g, Rng& rng, double p_alice = 0.5);
// Edges in sorted order alternate between Alice and Bob.
EdgePartition alternating_partition(const Graph& g);

enum class Destination { kPeer, kOtherPair };

struct Outgoing {
  Destination dest;
  BitString bits;
};

inline Outgoing to_peer(BitString bits) {
  return {Destination::kPeer, std::move(bits)};
}
inline Outgoing to_other_pair(BitString bits) {
  return {Destination::kOtherPair, std::move(bits)};
}

struct Incoming {
  Party from;
  BitString bits;
  bool cross_pair;
};

struct NextMessage {};
inline constexpr NextMessage next_message{};

template <class Out>
class PartyTask {
 public:
  struct promise_type;
  using Handle = std::coroutine_handle<promise_type>;

  struct promise_type {
    std::deque<Incoming> inbox;
    std::optional<Outgoing> outbox;
    std::optional<Out> result;
    std::exception_ptr error;
    bool waiting = false;

    PartyTask get_return_object() { return PartyTask(Handle::from_promise(*this)); }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(Outgoing msg) {
      outbox = std::move(msg);
      return {};
    }
    void return_value(Out value) { result = std::move(value); }
    void unhandled_exception() { error = std::current_exception(); }

    struct Awaiter {
      promise_type* p;
      bool await_ready() const noexcept { return !p->inbox.empty(); }
      void await_suspend(std::coroutine_handle<>) noexcept { p->waiting = true; }
      Incoming await_resume() {
        p->waiting = false;
        Incoming msg = std::move(p->inbox.front());
        p->inbox.pop_front();
        return msg;
      }
    };
    Awaiter await_transform(NextMessage) { return Awaiter{this}; }
  };

  enum class Event { kSent, kBlocked, kDone };

  PartyTask() = default;
  explicit PartyTask(Handle h) : handle_(h) {}
  PartyTask(PartyTask&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  PartyTask& operator=(PartyTask&& other) noexcept {
    if (this != &other) {
      reset();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  PartyTask(const PartyTask&) = delete;
  PartyTask& operator=(const PartyTask&) = delete;
  ~PartyTask() { reset(); }

  bool done() const { return handle_.done(); }

  // Runs the party until it sends, blocks on an empty inbox, or returns.
  Event step() {
    auto& p = handle_.promise();
    if (handle_.done()) return Event::kDone;
    if (p.waiting && p.inbox.empty()) return Event::kBlocked;
    handle_.resume();
    if (p.error) std::rethrow_exception(p.error);
    if (handle_.done()) return Event::kDone;
    if (p.outbox) return Event::kSent;
    return Event::kBlocked;
  }

  Outgoing take_outgoing() {
    auto& p = handle_.promise();
    Outgoing msg = std::move(*p.outbox);
    p.outbox.reset();
    return msg;
  }

  void deliver(Incoming msg) { handle_.promise().inbox.push_back(std::move(msg)); }

  const Out& result() const {
    if (!handle_.done() || !handle_.promise().result) {
      throw ProtocolError("party has not produced an output");
    }
    return *handle_.promise().result;
  }

 private:
  void reset() {
    if (handle_) handle_.destroy();
    handle_ = {};
  }
  Handle handle_{};
};

template <class Out>
struct RunResult {
  Out output;
  CommLedger ledger;
};

// Control passes to the other party whenever the current one blocks on an
// empty inbox or finishes. Rounds count maximal runs of messages by the same
// sender. One phase per run.
template <class Out>
RunResult<Out> run_two_party(PartyTask<Out> alice, PartyTask<Out> bob) {
  CommLedger ledger;
  ledger.begin_phase();
  PartyTask<Out>* tasks[2] = {&alice, &bob};
  const Party names[2] = {Party::kA, Party::kB};
  int current = 0;
  int last_sender = -1;
  int idle_turns = 0;
  while (!(alice.done() && bob.done())) {
    PartyTask<Out>& self = *tasks[current];
    PartyTask<Out>& other = *tasks[1 - current];
    const bool was_done = self.done();
    bool progressed = false;
    for (;;) {
      auto ev = self.step();
      if (ev == PartyTask<Out>::Event::kSent) {
        Outgoing msg = self.take_outgoing();
        if (msg.dest != Destination::kPeer) {
          throw ProtocolError("cross-pair message in a two-party run");
        }
        if (other.done()) {
          throw ProtocolError(std::string(party_name(names[current])) +
                              " sent a message after its peer finished");
        }
        if (last_sender != current) ledger.begin_round();
        last_sender = current;
        ledger.record(names[current], names[1 - current], msg.bits.size());
        other.deliver({names[current], std::move(msg.bits), false});
        progressed = true;
        continue;
      }
      break;
    }
    if (!was_done && self.done()) progressed = true;
    idle_turns = progressed ? 0 : idle_turns + 1;
    if (idle_turns >= 2 && !(alice.done() && bob.done())) {
      throw ProtocolError("deadlock: no party can make progress");
    }
    current = 1 - current;
  }
  if (!(alice.result() == bob.result())) {
    throw ProtocolError("parties disagree on the output");
  }
  return {alice.result(), std::move(ledger)};
}

enum class Pair { kAB, kCD };

struct RoundSchedule {
  int rounds = 1;
  Pair starter = Pair::kAB;

  // Pair speaking in 1-based round t.
  Pair speaker(int t) const {
    bool first = (t % 2) == 1;
    if (starter == Pair::kAB) return first ? Pair::kAB : Pair::kCD;
    return first ? Pair::kCD : Pair::kAB;
  }
};

// Four parties A, B, C, D. In round t the speaking pair alternates messages
// (control passes to the partner after each send or when blocked) until one
// of them broadcasts to the other pair, which ends the round. The silent pair
// is polled first each round and may only consume messages. After the last
// round every party must return without sending.
template <class Out>
RunResult<Out> run_four_party(const RoundSchedule& schedule,
                              std::array<PartyTask<Out>, 4> parties) {
  if (schedule.rounds < 1) throw std::invalid_argument("schedule needs r >= 1");
  using Event = typename PartyTask<Out>::Event;
  const Party names[4] = {Party::kA, Party::kB, Party::kC, Party::kD};
  CommLedger ledger;

  auto must_stay_silent = [&](int idx, const std::string& when) {
    if (parties[idx].step() == Event::kSent) {
      throw ProtocolError(std::string(party_name(names[idx])) +
                          " spoke out of schedule " + when);
    }
  };

  for (int t = 1; t <= schedule.rounds; ++t) {
    ledger.begin_phase();
    ledger.begin_round();
    const Pair pair = schedule.speaker(t);
    const int first = pair == Pair::kAB ? 0 : 2;
    const int silent = pair == Pair::kAB ? 2 : 0;
    const std::string when = "in round " + std::to_string(t);
    must_stay_silent(silent, when);
    must_stay_silent(silent + 1, when);

    int current = first;
    int idle_turns = 0;
    bool broadcast = false;
    while (!broadcast) {
      const int partner = current == first ? first + 1 : first;
      auto ev = parties[current].step();
      if (ev == Event::kSent) {
        Outgoing msg = parties[current].take_outgoing();
        idle_turns = 0;
        if (msg.dest == Destination::kPeer) {
          ledger.record(names[current], names[partner], msg.bits.size(), false);
          parties[partner].deliver({names[current], std::move(msg.bits), false});
        } else {
          const Party to = pair == Pair::kAB ? Party::kPairCD : Party::kPairAB;
          ledger.record(names[current], to, msg.bits.size(), true);
          for (int i = 0; i < 4; ++i) {
            if (i != current) parties[i].deliver({names[current], msg.bits, true});
          }
          broadcast = true;
        }
      } else if (++idle_turns >= 2) {
        throw ProtocolError("round " + std::to_string(t) +
                            " ended without a cross-pair message");
      }
      current = partner;
    }
  }

  for (int i = 0; i < 4; ++i) {
    auto ev = parties[i].step();
    if (ev == Event::kSent) {
      throw ProtocolError(std::string(party_name(names[i])) +
                          " spoke after the final round");
    }
    if (ev == Event::kBlocked) {
      throw ProtocolError(std::string(party_name(names[i])) +
                          " is waiting for a message after the final round");
    }
  }
  for (int i = 1; i < 4; ++i) {
    if (!(parties[i].result() == parties[0].result())) {
      throw ProtocolError("parties disagree on the output");
    }
  }
  return {parties[0].result(), std::move(ledger)};
}

}  // namespace degenlab

#endif  // DEGENLAB_COMM_H_
