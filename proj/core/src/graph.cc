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

#include "degenlab/graph.h"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

namespace degenlab {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("repeated edge (" + std::to_string(dup->first) +
                                ", " + std::to_string(dup->second) + ")");
  }
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

void validate_ordering(int n, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("ordering has " + std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("ordering is not a permutation (vertex " +
                                  std::to_string(v) + ")");
    }
    seen[v] = 1;
  }
}

PeelTrace peel(const Graph& g, const PeelOptions& options) {
  const int n = g.num_vertices();
  PeelTrace trace;
  trace.order.reserve(n);
  trace.degree_at_removal.reserve(n);
  std::vector<int> deg(n);
  std::vector<std::set<Vertex>> buckets(std::max(1, g.max_degree() + 1));
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    buckets[deg[v]].insert(v);
  }
  std::vector<char> removed(n, 0);
  Rng rng(options.seed);
  int low = 0;
  for (int step = 0; step < n; ++step) {
    // A removal lowers neighbor degrees by one, so the minimum can drop by
    // at most one per step.
    low = std::max(0, low - 1);
    while (buckets[low].empty()) ++low;
    auto& bucket = buckets[low];
    Vertex v = *bucket.begin();
    switch (options.tie_break) {
      case TieBreak::kSmallestId:
        v = *bucket.begin();
        break;
      case TieBreak::kLargestId:
        v = *bucket.rbegin();
        break;
      case TieBreak::kRandom: {
        std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 1);
        v = *std::next(bucket.begin(), static_cast<long>(pick(rng)));
        break;
      }
    }
    bucket.erase(v);
    removed[v] = 1;
    trace.order.push_back(v);
    trace.degree_at_removal.push_back(low);
    trace.degeneracy = std::max(trace.degeneracy, low);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      buckets[deg[u]].erase(u);
      --deg[u];
      buckets[deg[u]].insert(u);
    }
  }
  return trace;
}

int degeneracy(const Graph& g) { return peel(g).degeneracy; }

std::vector<int> outdegree_profile(const Graph& g, std::span<const Vertex> order) {
  const int n = g.num_vertices();
  validate_ordering(n, order);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<int> out(n, 0);
  for (const auto& [u, v] : g.edges()) {
    if (position[u] < position[v]) {
      ++out[u];
    } else {
      ++out[v];
    }
  }
  return out;
}

bool is_k_ordering(const Graph& g, std::span<const Vertex> order, int k) {
  auto profile = outdegree_profile(g, order);
  return std::all_of(profile.begin(), profile.end(),
                     [k](int d) { return d <= k; });
}

std::vector<Vertex> k_core(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      if (--deg[u] < k) {
        removed[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

Decision peel_decision(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::set<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= k) ready.insert(v);
  }
  VertexOrdering order;
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    if (ready.empty()) {
      Reject reject;
      for (Vertex v = 0; v < n; ++v) {
        if (!removed[v]) reject.core.push_back(v);
      }
      return reject;
    }
    Vertex v = *ready.begin();
    ready.erase(ready.begin());
    removed[v] = 1;
    order.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      if (--deg[u] == k) ready.insert(u);
    }
  }
  return Accept{std::move(order)};
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph gnp_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  validate_ordering(g.num_vertices(), perm);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.num_vertices(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.num_vertices();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

}  // namespace degenlab
