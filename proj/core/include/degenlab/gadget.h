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

// The layered gadget graph whose degeneracy encodes the answer bit of a
// BMHPC instance: kappa <= d - 3 when the bit is 1 and kappa >= d - 2 when
// it is 0, with d = 6mr + 3m.
//
// Vertex layout (ids are assigned in this canonical order):
//   layer nodes   v(l, i, c) for l in 0..2r, i in 0..m-1, c in 0..2;
//                 id = (l * m + i) * 3 + c
//   special nodes s_0, s_1, s_2
//   aux nodes     u_0 .. u_{d-1}
// Layer l represents universe Y iff ceil(l / 2) is odd, X otherwise.

#ifndef DEGENLAB_GADGET_H_
#define DEGENLAB_GADGET_H_

#include <array>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "degenlab/graph.h"
#include "degenlab/hpc.h"

namespace degenlab {

struct VertexLabel {
  enum class Kind { kLayer, kSpecial, kAux };
  Kind kind = Kind::kLayer;
  int layer = 0;  // kLayer only
  int index = 0;  // 1-based: i for layer nodes, j for specials, a for aux
  int copy = 0;   // kLayer only, 1..3

  bool operator==(const VertexLabel&) const = default;
};

class GadgetError : public std::runtime_error {
 public:
  GadgetError(Vertex v, const std::string& what)
      : std::runtime_error(what + " (vertex " + std::to_string(v) + ")"), vertex_(v) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

// Geometry shared by every gadget with the same (m, r).
struct GadgetShape {
  int m = 0;
  int r = 0;

  int d() const { return 6 * m * r + 3 * m; }
  int num_layers() const { return 2 * r + 1; }
  int num_layer_vertices() const { return 3 * m * num_layers(); }
  int num_core_vertices() const { return num_layer_vertices() + 3; }  // V'
  int num_vertices() const { return num_core_vertices() + d(); }

  Vertex layer_vertex(int layer, int index0, int copy0) const {
    return (layer * m + index0) * 3 + copy0;
  }
  std::array<Vertex, 3> triple(int layer, int index0) const {
    Vertex v = layer_vertex(layer, index0, 0);
    return {v, v + 1, v + 2};
  }
  Vertex special(int j0) const { return num_layer_vertices() + j0; }
  Vertex aux(int a0) const { return num_core_vertices() + a0; }

  VertexLabel label(Vertex v) const;
  // Exact target for layer and special nodes; lower bound for aux nodes.
  int target_degree(Vertex v) const;
  // Whether last-layer triple `index0` belongs to Q (skipped by specials).
  bool in_q(int index0, int excluded_bit = 0) const {
    return element_bit(index0) == excluded_bit;
  }
};

struct GadgetOptions {
  // Last-layer triples whose element has this bit are kept away from the
  // special nodes. The reduction uses 0; 1 exists for negative tests.
  int excluded_bit = 0;
};

struct GadgetGraph {
  GadgetShape shape;
  Graph graph;
  std::vector<VertexLabel> labels;
  int d = 0;
  // Padding diagnostics.
  std::vector<int> deficiency;  // per core vertex, before padding
  int aux_matchings = 0;        // x
  int aux_induced_max_degree = 0;

  int m() const { return shape.m; }
  int r() const { return shape.r; }
};

// Edge groups of the gadget, each computable from what one player knows.
// E_1 (triangles), E_2 (cross edges) and E_S (special nodes) depend only on
// the shape.
std::vector<Edge> gadget_fixed_edges(const GadgetShape& shape,
                                     const GadgetOptions& options = {});
// Encoding edges of one family. `family` is 'A', 'B', 'C' or 'D'; the sets
// are the matching family of the instance (A/B for odd layers, C/D for even).
std::vector<Edge> gadget_family_edges(const GadgetShape& shape, char family,
                                      const std::vector<std::vector<ElementSet>>& sets);

struct AuxPadding {
  std::vector<Edge> edges;
  std::vector<int> deficiency;  // per core vertex
  int matchings = 0;
};

// Padding from the degrees of the core vertices in G' (the graph without
// aux nodes) alone: round-robin deficiency edges, then the first x factors
// of the circle-method 1-factorization of K_d on the aux nodes.
AuxPadding gadget_aux_padding(const GadgetShape& shape, std::span<const int> core_degrees);

// Builds the gadget and audits every degree target; throws GadgetError.
GadgetGraph build_gadget(const MHPCInstance& inst, const GadgetOptions& options = {});

struct InvariantCheck {
  std::string name;
  bool ok = true;
  std::vector<Vertex> counterexamples;  // first few offending vertices
  std::string detail;
};

struct GadgetReport {
  std::vector<InvariantCheck> checks;
  bool ok() const;
  const InvariantCheck& check(const std::string& name) const;
  nlohmann::json to_json() const;
};

// Re-checks every invariant from the graph and labels alone:
// vertex_count, labels, layer_degrees, special_nodes, q_size, aux_degrees,
// aux_induced_degree, deficiency_ranges.
GadgetReport verify_gadget(const GadgetGraph& g);

// Graph text plus a JSON sidecar {m, r, d, labels}.
void write_gadget(const GadgetGraph& g, std::ostream& graph_out, std::ostream& sidecar_out);
GadgetGraph read_gadget(std::istream& graph_in, std::istream& sidecar_in);
nlohmann::json label_json(const VertexLabel& label);

}  // namespace degenlab

#endif  // DEGENLAB_GADGET_H_
