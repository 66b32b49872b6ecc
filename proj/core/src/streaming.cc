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

#include "degenlab/streaming.h"

#include <algorithm>
#include <stdexcept>

#include "degenlab/gadget.h"

namespace degenlab {
namespace {

class StoreAll final : public StreamingAlgorithm {
 public:
  void init(int n) override {
    n_ = n;
    edges_.clear();
  }
  void begin_pass() override {}
  void process_edge(Vertex u, Vertex v) override { edges_.emplace_back(u, v); }
  bool end_pass() override { return false; }
  bool finalize(int k) override { return degeneracy(Graph(n_, edges_)) <= k; }

  BitString snapshot() const override {
    BitWriter w;
    w.write_uint(edges_.size(), 32);
    for (const auto& [u, v] : edges_) {
      w.write_bounded(u, n_);
      w.write_bounded(v, n_);
    }
    return w.take();
  }
  void restore(const BitString& state) override {
    BitReader r(state);
    edges_.resize(r.read_uint(32));
    for (auto& [u, v] : edges_) {
      u = static_cast<Vertex>(r.read_bounded(n_));
      v = static_cast<Vertex>(r.read_bounded(n_));
    }
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

class NaivePeeler final : public StreamingAlgorithm {
 public:
  void init(int n) override {
    n_ = n;
    alive_.assign(n, 1);
    deg_.assign(n, 0);
    max_seen_ = 0;
  }
  void begin_pass() override { std::fill(deg_.begin(), deg_.end(), 0); }
  void process_edge(Vertex u, Vertex v) override {
    if (alive_[u] && alive_[v]) {
      ++deg_[u];
      ++deg_[v];
    }
  }
  bool end_pass() override {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (alive_[v] && (best < 0 || deg_[v] < deg_[best])) best = v;
    }
    if (best < 0) return false;
    max_seen_ = std::max(max_seen_, deg_[best]);
    alive_[best] = 0;
    return std::find(alive_.begin(), alive_.end(), 1) != alive_.end();
  }
  bool finalize(int k) override { return max_seen_ <= k; }

  BitString snapshot() const override {
    BitWriter w;
    for (char a : alive_) w.write_bit(a);
    for (int x : deg_) w.write_bounded(x, n_);
    w.write_bounded(max_seen_, n_);
    return w.take();
  }
  void restore(const BitString& state) override {
    BitReader r(state);
    for (auto& a : alive_) a = r.read_bit();
    for (auto& x : deg_) x = static_cast<int>(r.read_bounded(n_));
    max_seen_ = static_cast<int>(r.read_bounded(n_));
  }

 private:
  int n_ = 0;
  std::vector<char> alive_;
  std::vector<int> deg_;
  int max_seen_ = 0;
};

BitString encode_degrees(const std::vector<int>& deg, int n) {
  BitWriter w;
  for (int x : deg) w.write_bounded(x, n);
  return w.take();
}

std::vector<int> decode_degrees(const BitString& bits, int n) {
  BitReader r(bits);
  std::vector<int> deg(n);
  for (auto& x : deg) x = static_cast<int>(r.read_bounded(n));
  return deg;
}

void add_degrees(std::vector<int>& deg, const std::vector<Edge>& edges) {
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
}

struct Handoff {
  Party from;
  Party to;
  std::size_t bits;
  bool cross;
};

}  // namespace

std::unique_ptr<StreamingAlgorithm> make_store_all() { return std::make_unique<StoreAll>(); }
std::unique_ptr<StreamingAlgorithm> make_naive_peeler() {
  return std::make_unique<NaivePeeler>();
}

StreamingRun simulate_streaming_reduction(const MHPCInstance& inst,
                                          const StreamingFactory& factory, int max_passes) {
  validate(inst);
  if (max_passes < 1) throw std::invalid_argument("pass budget must be positive");
  const GadgetShape shape{inst.m, inst.r};
  const int n = shape.num_vertices();
  const int k = shape.d() - 3;

  std::vector<Edge> c_edges = gadget_fixed_edges(shape);
  const auto own_c = gadget_family_edges(shape, 'C', inst.c);
  c_edges.insert(c_edges.end(), own_c.begin(), own_c.end());
  const std::vector<Edge> d_edges = gadget_family_edges(shape, 'D', inst.d);
  const std::vector<Edge> a_edges = gadget_family_edges(shape, 'A', inst.a);
  std::vector<Edge> b_edges = gadget_family_edges(shape, 'B', inst.b);

  StreamingRun run;
  std::vector<Handoff> handoffs;
  std::unique_ptr<StreamingAlgorithm> alg = factory();
  alg->init(n);

  auto hand_over = [&](Party from, Party to, const BitString* table) {
    const BitString state = alg->snapshot();
    const std::size_t table_bits = table ? table->size() : 0;
    const bool cross = (from == Party::kD && to == Party::kA) ||
                       (from == Party::kB && to == Party::kC);
    handoffs.push_back({from, to, state.size() + table_bits, cross});
    run.max_state_bits = std::max(run.max_state_bits, state.size());
    run.state_bits_total += state.size();
    run.degree_table_bits += table_bits;
    alg = factory();
    alg->init(n);
    alg->restore(state);
  };

  std::uint64_t first_digest = 0;
  for (int pass = 1;; ++pass) {
    BitWriter order;  // edge sequence of this pass, for the consistency check
    auto feed = [&](const std::vector<Edge>& edges) {
      for (const auto& [u, v] : edges) {
        alg->process_edge(u, v);
        order.write_bounded(u, n);
        order.write_bounded(v, n);
      }
    };
    if (pass > 1) hand_over(Party::kB, Party::kC, nullptr);

    alg->begin_pass();
    feed(c_edges);
    std::vector<int> deg(n, 0);
    BitString table;
    if (pass == 1) {
      add_degrees(deg, c_edges);
      table = encode_degrees(deg, n);
    }
    hand_over(Party::kC, Party::kD, pass == 1 ? &table : nullptr);

    feed(d_edges);
    if (pass == 1) {
      deg = decode_degrees(table, n);
      add_degrees(deg, d_edges);
      table = encode_degrees(deg, n);
    }
    hand_over(Party::kD, Party::kA, pass == 1 ? &table : nullptr);

    feed(a_edges);
    if (pass == 1) {
      deg = decode_degrees(table, n);
      add_degrees(deg, a_edges);
      table = encode_degrees(deg, n);
    }
    hand_over(Party::kA, Party::kB, pass == 1 ? &table : nullptr);

    if (pass == 1) {
      deg = decode_degrees(table, n);
      add_degrees(deg, b_edges);
      const AuxPadding pad = gadget_aux_padding(shape, deg);
      b_edges.insert(b_edges.end(), pad.edges.begin(), pad.edges.end());
      feed(b_edges);
    } else {
      feed(b_edges);
    }
    const std::uint64_t digest = order.bits().digest();
    if (pass == 1) {
      first_digest = digest;
    } else if (digest != first_digest) {
      run.edge_order_consistent = false;
    }

    const bool more = alg->end_pass();
    run.passes = pass;
    if (!more) break;
    if (pass == max_passes) {
      throw std::runtime_error("streaming algorithm wants more than " +
                               std::to_string(max_passes) + " passes");
    }
  }
  run.bit = alg->finalize(k) ? 1 : 0;

  // A phase ends with a cross-pair handoff; B's closing work after the last
  // one belongs to the final phase.
  std::size_t crosses = std::count_if(handoffs.begin(), handoffs.end(),
                                      [](const Handoff& h) { return h.cross; });
  std::size_t seen = 0;
  for (const auto& h : handoffs) {
    run.ledger.record(h.from, h.to, h.bits, h.cross);
    if (h.cross && ++seen < crosses) run.ledger.begin_phase();
  }
  run.phases = run.ledger.phases();
  return run;
}

ReductionReport streaming_report(const MHPCInstance& inst, const StreamingRun& run) {
  ReductionReport report = verify_split(inst);
  report.phases = run.phases;
  report.max_state_bits = run.max_state_bits;
  report.bits_total = run.ledger.bits_total();
  return report;
}

}  // namespace degenlab
