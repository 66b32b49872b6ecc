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

// Simple undirected graphs and the exact sequential algorithms on them:
// min-degree peeling, degeneracy, k-orderings and k-cores.

#ifndef DEGENLAB_GRAPH_H_
#define DEGENLAB_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "degenlab/coins.h"

namespace degenlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexOrdering = std::vector<Vertex>;

// Immutable simple graph on vertices 0..n-1 with CSR adjacency.
class Graph {
 public:
  Graph() = default;
  // Edges may be given in either orientation. Throws std::invalid_argument
  // on self-loops, repeated edges and out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  // Normalized (u < v) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const;
  int max_degree() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

// Throws std::invalid_argument unless order is a permutation of 0..n-1.
void validate_ordering(int n, std::span<const Vertex> order);

enum class TieBreak { kSmallestId, kLargestId, kRandom };

struct PeelOptions {
  TieBreak tie_break = TieBreak::kSmallestId;
  std::uint64_t seed = 0;  // used by kRandom only
};

struct PeelTrace {
  VertexOrdering order;
  std::vector<int> degree_at_removal;
  int degeneracy = 0;
};

// Repeatedly removes a vertex of minimum residual degree.
PeelTrace peel(const Graph& g, const PeelOptions& options = {});

int degeneracy(const Graph& g);

// Number of neighbors of each vertex that come later in `order`.
std::vector<int> outdegree_profile(const Graph& g, std::span<const Vertex> order);

bool is_k_ordering(const Graph& g, std::span<const Vertex> order, int k);

// Sorted vertex set of the k-core (empty when there is none).
std::vector<Vertex> k_core(const Graph& g, int k);

struct Accept {
  VertexOrdering order;
  bool operator==(const Accept&) const = default;
};
struct Reject {
  std::vector<Vertex> core;  // sorted
  bool operator==(const Reject&) const = default;
};
using Decision = std::variant<Accept, Reject>;

inline bool accepted(const Decision& d) {
  return std::holds_alternative<Accept>(d);
}

// Removes the smallest-id vertex of residual degree <= k until the graph is
// empty (Accept with the removal order) or no such vertex exists (Reject with
// the remaining (k+1)-core).
Decision peel_decision(const Graph& g, int k);

// Text format: "n m" then m lines "u v" with 0 <= u < v < n.
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Graph read_graph_text(std::istream& in);
Graph load_graph_file(const std::string& path);
void write_graph_text(std::ostream& out, const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);  // vertex 0 joined to 1..n-1
Graph empty_graph(int n);
Graph petersen_graph();
Graph gnp_graph(int n, double p, Rng& rng);
// Applies a vertex relabeling v -> perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
// Vertex-disjoint union; vertices of b are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace degenlab

#endif  // DEGENLAB_GRAPH_H_
