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

#include "degenlab/degen_protocol.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace degenlab {
namespace {

struct PartyInput {
  const Graph* own = nullptr;
  int k = 0;
  bool is_alice = false;
  const std::vector<int>* priority = nullptr;
  DecisionObserver* observer = nullptr;  // Alice only
  std::vector<int>* updates = nullptr;   // Alice only
};

int ceil_sqrt(int n) {
  int s = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (s * s < n) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= n) --s;
  return s;
}

int priority_of(const PartyInput& in, Vertex v) {
  return in.priority->empty() ? v : (*in.priority)[v];
}

BitString encode_degrees(const std::vector<int>& deg, const std::vector<char>& live) {
  const int n = static_cast<int>(deg.size());
  BitWriter w;
  for (int v = 0; v < n; ++v) w.write_bounded(live[v] ? deg[v] : 0, n);
  return w.take();
}

std::vector<int> decode_degrees(const BitString& bits, int n) {
  BitReader r(bits);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(r.read_bounded(n));
  return deg;
}

std::vector<Vertex> live_vertices(const std::vector<char>& live) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(live.size()); ++v) {
    if (live[v]) out.push_back(v);
  }
  return out;
}

PartyTask<Decision> sqrt_party(PartyInput in) {
  const Graph& g = *in.own;
  const int n = g.num_vertices();
  const int k = in.k;
  if (n == 0) co_return Decision{Accept{}};
  const int s = ceil_sqrt(n);
  enum Band : char { kDead, kReady, kLow, kSafe };

  std::vector<int> own_deg(n);
  for (Vertex v = 0; v < n; ++v) own_deg[v] = g.degree(v);
  std::vector<char> live(n, 1);
  int live_count = n;
  VertexOrdering order;

  while (live_count > 0) {
    BitString mine = encode_degrees(own_deg, live);
    std::vector<int> peer;
    if (in.is_alice) {
      co_yield to_peer(std::move(mine));
      peer = decode_degrees((co_await next_message).bits, n);
    } else {
      peer = decode_degrees((co_await next_message).bits, n);
      co_yield to_peer(std::move(mine));
    }

    std::vector<int> deg(n, 0);
    std::vector<char> band(n, kDead);
    std::set<std::pair<int, Vertex>> ready;
    std::vector<Vertex> safe;
    for (Vertex v = 0; v < n; ++v) {
      if (!live[v]) continue;
      deg[v] = own_deg[v] + peer[v];
      if (deg[v] <= k) {
        band[v] = kReady;
        ready.insert({priority_of(in, v), v});
        if (in.observer) in.observer->on_ready(v, deg[v]);
      } else if (deg[v] <= k + s) {
        band[v] = kLow;
      } else {
        band[v] = kSafe;
        safe.push_back(v);
      }
    }
    if (in.observer) in.observer->on_block_start(safe);

    for (int it = 0; it < s && live_count > 0; ++it) {
      if (ready.empty()) co_return Decision{Reject{live_vertices(live)}};
      const Vertex v = ready.begin()->second;
      ready.erase(ready.begin());
      live[v] = 0;
      band[v] = kDead;
      --live_count;
      order.push_back(v);
      if (in.observer) in.observer->on_delete(v);

      std::vector<int> low_nbrs;
      for (Vertex u : g.neighbors(v)) {
        if (!live[u]) continue;
        --own_deg[u];
        if (band[u] == kLow) low_nbrs.push_back(u);
      }
      BitWriter w;
      w.write_list(low_nbrs, n, n);
      std::vector<int> peer_nbrs;
      if (in.is_alice) {
        co_yield to_peer(w.take());
        BitString reply = (co_await next_message).bits;
        BitReader r(reply);
        peer_nbrs = r.read_list(n, n);
      } else {
        BitString msg = (co_await next_message).bits;
        BitReader r(msg);
        peer_nbrs = r.read_list(n, n);
        co_yield to_peer(w.take());
      }
      // Each edge (v, u) belongs to exactly one party, so u appears once.
      for (const auto* list : {&low_nbrs, &peer_nbrs}) {
        for (Vertex u : *list) {
          if (band[u] != kLow) throw ProtocolError("reported vertex is not in L");
          if (--deg[u] < k + 1) {
            band[u] = kReady;
            ready.insert({priority_of(in, u), u});
            if (in.observer) in.observer->on_ready(u, deg[u]);
          }
        }
      }
    }
  }
  co_return Decision{Accept{std::move(order)}};
}

PartyTask<Decision> fast_party(PartyInput in) {
  const Graph& g = *in.own;
  const int n = g.num_vertices();
  const int k = in.k;
  if (n == 0) co_return Decision{Accept{}};

  std::vector<int> own_deg(n);
  for (Vertex v = 0; v < n; ++v) own_deg[v] = g.degree(v);
  std::vector<char> live(n, 1);
  int live_count = n;

  std::vector<int> peer_sent;
  {
    BitString mine = encode_degrees(own_deg, live);
    if (in.is_alice) {
      co_yield to_peer(std::move(mine));
      peer_sent = decode_degrees((co_await next_message).bits, n);
    } else {
      peer_sent = decode_degrees((co_await next_message).bits, n);
      co_yield to_peer(std::move(mine));
    }
  }
  std::vector<int> own_sent = own_deg;

  // bucket[v] == 0 means v is in D; otherwise v is in S_bucket[v].
  std::vector<int> bucket(n, 0);
  std::set<std::pair<int, Vertex>> ready;
  auto place = [&](Vertex u) {
    const int known = own_sent[u] + peer_sent[u];
    if (known <= k) {
      bucket[u] = 0;
      ready.insert({priority_of(in, u), u});
      if (in.observer) in.observer->on_ready(u, known);
    } else {
      bucket[u] = std::bit_width(static_cast<unsigned>(known - k));
    }
  };
  auto threshold = [](int i) { return i <= 2 ? 1 : 1 << (i - 2); };
  for (Vertex v = 0; v < n; ++v) place(v);

  VertexOrdering order;
  while (live_count > 0) {
    if (ready.empty()) co_return Decision{Reject{live_vertices(live)}};
    const Vertex v = ready.begin()->second;
    ready.erase(ready.begin());
    live[v] = 0;
    --live_count;
    order.push_back(v);
    if (in.observer) in.observer->on_delete(v);

    std::vector<int> mine;  // sorted, since adjacency lists are
    for (Vertex u : g.neighbors(v)) {
      if (!live[u]) continue;
      --own_deg[u];
      if (bucket[u] > 0 && own_sent[u] - own_deg[u] >= threshold(bucket[u])) {
        mine.push_back(u);
      }
    }

    std::vector<int> synced;
    if (in.is_alice) {
      BitWriter w;
      w.write_bounded(mine.size(), n + 1);
      for (Vertex u : mine) {
        w.write_bounded(u, n);
        w.write_bounded(own_deg[u], n);
      }
      co_yield to_peer(w.take());
      BitString reply = (co_await next_message).bits;
      BitReader r(reply);
      for (Vertex u : mine) peer_sent[u] = static_cast<int>(r.read_bounded(n));
      std::vector<int> extras(r.read_bounded(n + 1));
      for (auto& u : extras) {
        u = static_cast<int>(r.read_bounded(n));
        peer_sent[u] = static_cast<int>(r.read_bounded(n));
      }
      if (!extras.empty()) {
        BitWriter w2;
        for (Vertex u : extras) w2.write_bounded(own_deg[u], n);
        co_yield to_peer(w2.take());
      }
      synced = mine;
      synced.insert(synced.end(), extras.begin(), extras.end());
    } else {
      BitString msg = (co_await next_message).bits;
      BitReader r(msg);
      std::vector<int> theirs(r.read_bounded(n + 1));
      for (auto& u : theirs) {
        u = static_cast<int>(r.read_bounded(n));
        peer_sent[u] = static_cast<int>(r.read_bounded(n));
      }
      std::vector<int> extras;
      std::set_difference(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                          std::back_inserter(extras));
      BitWriter w;
      for (Vertex u : theirs) w.write_bounded(own_deg[u], n);
      w.write_bounded(extras.size(), n + 1);
      for (Vertex u : extras) {
        w.write_bounded(u, n);
        w.write_bounded(own_deg[u], n);
      }
      co_yield to_peer(w.take());
      if (!extras.empty()) {
        BitString back = (co_await next_message).bits;
        BitReader r2(back);
        for (Vertex u : extras) peer_sent[u] = static_cast<int>(r2.read_bounded(n));
      }
      synced = theirs;
      synced.insert(synced.end(), extras.begin(), extras.end());
    }

    std::sort(synced.begin(), synced.end());
    for (Vertex u : synced) {
      if (!live[u] || bucket[u] == 0) throw ProtocolError("synced a vertex outside S");
      own_sent[u] = own_deg[u];
      if (in.updates) ++(*in.updates)[u];
      place(u);
    }
  }
  co_return Decision{Accept{std::move(order)}};
}

template <class PartyFn>
DecisionRun run_decider(PartyFn party, const EdgePartition& p, int k,
                        const DecideOptions& options) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int n = p.base.num_vertices();
  if (!options.priority.empty()) validate_ordering(n, options.priority);
  DecisionRun run;
  run.updates.assign(n, 0);
  PartyInput a{&p.alice, k, true, &options.priority, options.observer, &run.updates};
  PartyInput b{&p.bob, k, false, &options.priority, nullptr, nullptr};
  auto result = run_two_party(party(a), party(b));
  run.decision = std::move(result.output);
  run.ledger = std::move(result.ledger);
  return run;
}

}  // namespace

int DecisionRun::updates_max() const {
  return updates.empty() ? 0 : *std::max_element(updates.begin(), updates.end());
}

DecisionRun degen_decide_sqrt(const EdgePartition& p, int k,
                              const DecideOptions& options) {
  return run_decider(sqrt_party, p, k, options);
}

DecisionRun degen_decide_fast(const EdgePartition& p, int k,
                              const DecideOptions& options) {
  return run_decider(fast_party, p, k, options);
}

SearchResult degen_search(const EdgePartition& p, ProtocolKind kind) {
  const int n = p.base.num_vertices();
  SearchResult out;
  auto decide = [&](int k) {
    DecisionRun run = kind == ProtocolKind::kFast ? degen_decide_fast(p, k)
                                                  : degen_decide_sqrt(p, k);
    out.ledger.append(run.ledger);
    out.max_run_bits = std::max(out.max_run_bits, run.ledger.bits_total());
    out.updates_max = std::max(out.updates_max, run.updates_max());
    ++out.decision_runs;
    return run.decision;
  };
  if (n == 0) return out;

  std::map<int, Decision> probes;
  int lo = 0;
  int hi = n - 1;  // kappa <= n - 1 always
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    Decision d = decide(mid);
    if (accepted(d)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
    probes.emplace(mid, std::move(d));
  }
  out.kappa = lo;

  auto it = probes.find(out.kappa);
  if (it == probes.end()) it = probes.emplace(out.kappa, decide(out.kappa)).first;
  if (!accepted(it->second)) throw ProtocolError("search ended on a rejecting k");
  out.ordering = std::get<Accept>(it->second).order;

  if (out.kappa == 0) {
    for (Vertex v = 0; v < n; ++v) out.core.push_back(v);
  } else {
    auto rej = probes.find(out.kappa - 1);
    if (rej == probes.end() || accepted(rej->second)) {
      throw ProtocolError("search has no rejecting probe below kappa");
    }
    out.core = std::get<Reject>(rej->second).core;
  }
  return out;
}

nlohmann::json decision_json(const DecisionRun& run, int k, int kappa) {
  return {{"decision", accepted(run.decision) ? "accept" : "reject"},
          {"k", k},
          {"kappa", kappa},
          {"bits_total", run.ledger.bits_total()},
          {"updates_per_vertex_max", run.updates_max()}};
}

}  // namespace degenlab
