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

#include "degenlab/gadget.h"

#include <algorithm>

namespace degenlab {
namespace {

constexpr std::size_t kMaxCounterexamples = 10;

void note(InvariantCheck& c, Vertex v) {
  c.ok = false;
  if (c.counterexamples.size() < kMaxCounterexamples) c.counterexamples.push_back(v);
}

InvariantCheck named(std::string name) {
  InvariantCheck c;
  c.name = std::move(name);
  return c;
}

int aux_neighbors(const GadgetGraph& g, Vertex v) {
  const int core = g.shape.num_core_vertices();
  int count = 0;
  for (Vertex u : g.graph.neighbors(v)) count += u >= core;
  return count;
}

}  // namespace

VertexLabel GadgetShape::label(Vertex v) const {
  VertexLabel l;
  if (v < num_layer_vertices()) {
    l.kind = VertexLabel::Kind::kLayer;
    l.layer = v / (3 * m);
    l.index = (v % (3 * m)) / 3 + 1;
    l.copy = v % 3 + 1;
  } else if (v < num_core_vertices()) {
    l.kind = VertexLabel::Kind::kSpecial;
    l.index = v - num_layer_vertices() + 1;
  } else {
    l.kind = VertexLabel::Kind::kAux;
    l.index = v - num_core_vertices() + 1;
  }
  return l;
}

int GadgetShape::target_degree(Vertex v) const {
  const VertexLabel l = label(v);
  switch (l.kind) {
    case VertexLabel::Kind::kLayer:
      if (l.layer == 0) return l.index == 1 ? d() - 3 : d();
      return l.layer % 2 == 1 ? d() - 1 : d();
    case VertexLabel::Kind::kSpecial:
      return d() + 6 * r;
    case VertexLabel::Kind::kAux:
      return d() + 6 * r + 3;
  }
  return 0;
}

std::vector<Edge> gadget_fixed_edges(const GadgetShape& shape, const GadgetOptions& options) {
  const int m = shape.m;
  const int r = shape.r;
  std::vector<Edge> edges;
  for (int l = 0; l < shape.num_layers(); ++l) {
    for (int i = 0; i < m; ++i) {
      auto t = shape.triple(l, i);
      edges.insert(edges.end(), {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}});
    }
  }
  for (int l = 1; l <= r; ++l) {
    for (int i = 0; i < m; ++i) {
      for (Vertex a : shape.triple(2 * l - 1, i)) {
        for (Vertex b : shape.triple(2 * l, i)) edges.emplace_back(a, b);
      }
    }
  }
  const Vertex s0 = shape.special(0), s1 = shape.special(1), s2 = shape.special(2);
  edges.insert(edges.end(), {{s0, s1}, {s0, s2}, {s1, s2}});
  for (int j = 0; j < 3; ++j) {
    for (int l = 0; l < shape.num_layers(); ++l) {
      for (int i = 0; i < m; ++i) {
        if (l == 2 * r && shape.in_q(i, options.excluded_bit)) continue;
        for (Vertex v : shape.triple(l, i)) edges.emplace_back(shape.special(j), v);
      }
    }
  }
  return edges;
}

std::vector<Edge> gadget_family_edges(const GadgetShape& shape, char family,
                                      const std::vector<std::vector<ElementSet>>& sets) {
  const bool ab = family == 'A' || family == 'B';
  if (!ab && family != 'C' && family != 'D') {
    throw std::invalid_argument("family must be one of A, B, C, D");
  }
  const int from_copy = (family == 'A' || family == 'C') ? 0 : 1;
  std::vector<Edge> edges;
  for (int j = ab ? 1 : 2; j <= shape.r; j += 2) {
    const int lo = 2 * j - 2;
    const int hi = 2 * j - 1;
    for (int i = 0; i < shape.m; ++i) {
      const Vertex from = shape.layer_vertex(lo, i, from_copy);
      for (int t : sets.at(j - 1).at(i)) {
        edges.emplace_back(from, shape.layer_vertex(hi, t, 0));
        edges.emplace_back(from, shape.layer_vertex(hi, t, 1));
      }
    }
  }
  return edges;
}

AuxPadding gadget_aux_padding(const GadgetShape& shape, std::span<const int> core_degrees) {
  const int core = shape.num_core_vertices();
  const int d = shape.d();
  if (static_cast<int>(core_degrees.size()) < core) {
    throw std::invalid_argument("degree table is shorter than the core vertex set");
  }
  if (d % 2 != 0) throw std::invalid_argument("aux matchings need an even d");
  AuxPadding out;
  out.deficiency.resize(core);
  std::vector<int> aux_deg(d, 0);
  int p = 0;
  for (Vertex v = 0; v < core; ++v) {
    const int def = shape.target_degree(v) - core_degrees[v];
    out.deficiency[v] = def;
    if (def < 0) throw GadgetError(v, "degree exceeds its target before padding");
    if (def > d) throw GadgetError(v, "deficiency exceeds the number of aux nodes");
    for (int c = 0; c < def; ++c) {
      out.edges.emplace_back(v, shape.aux(p));
      ++aux_deg[p];
      p = (p + 1) % d;
    }
  }
  const auto low = std::min_element(aux_deg.begin(), aux_deg.end());
  const int x = std::max(0, d + 6 * shape.r + 3 - *low);
  if (x > d - 1) {
    throw GadgetError(shape.aux(static_cast<int>(low - aux_deg.begin())),
                      "padding needs more matchings than K_d has");
  }
  out.matchings = x;
  const int ring = d - 1;
  for (int t = 0; t < x; ++t) {
    out.edges.emplace_back(shape.aux(ring), shape.aux(t));
    for (int k = 1; k < d / 2; ++k) {
      out.edges.emplace_back(shape.aux((t + k) % ring), shape.aux((t - k + ring) % ring));
    }
  }
  return out;
}

GadgetGraph build_gadget(const MHPCInstance& inst, const GadgetOptions& options) {
  validate(inst);
  if (inst.m % 4 != 0) {
    throw std::invalid_argument("gadget needs m divisible by 4; pad the instance first");
  }
  GadgetGraph g;
  g.shape = GadgetShape{inst.m, inst.r};
  g.d = g.shape.d();
  const int n = g.shape.num_vertices();
  const int core = g.shape.num_core_vertices();

  std::vector<Edge> edges = gadget_fixed_edges(g.shape, options);
  for (auto [fam, sets] : {std::pair{'A', &inst.a}, std::pair{'B', &inst.b},
                           std::pair{'C', &inst.c}, std::pair{'D', &inst.d}}) {
    auto part = gadget_family_edges(g.shape, fam, *sets);
    edges.insert(edges.end(), part.begin(), part.end());
  }
  std::vector<int> core_deg(core, 0);
  for (const auto& [u, v] : edges) {
    ++core_deg[u];
    ++core_deg[v];
  }
  AuxPadding pad = gadget_aux_padding(g.shape, core_deg);
  edges.insert(edges.end(), pad.edges.begin(), pad.edges.end());
  g.graph = Graph(n, std::move(edges));  // rejects repeated edges
  g.deficiency = std::move(pad.deficiency);
  g.aux_matchings = pad.matchings;

  for (Vertex v = 0; v < n; ++v) {
    const int deg = g.graph.degree(v);
    const int target = g.shape.target_degree(v);
    if (v < core ? deg != target : deg < target) {
      throw GadgetError(v, "degree " + std::to_string(deg) + " misses target " +
                               std::to_string(target));
    }
    g.labels.push_back(g.shape.label(v));
  }
  for (int a = 0; a < g.d; ++a) {
    g.aux_induced_max_degree =
        std::max(g.aux_induced_max_degree, aux_neighbors(g, g.shape.aux(a)));
  }
  return g;
}

bool GadgetReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

const InvariantCheck& GadgetReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no invariant named " + name);
}

nlohmann::json GadgetReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name},
                   {"ok", c.ok},
                   {"counterexamples", c.counterexamples},
                   {"detail", c.detail}});
  }
  return out;
}

GadgetReport verify_gadget(const GadgetGraph& g) {
  const GadgetShape& s = g.shape;
  const int m = s.m;
  const int r = s.r;
  const int d = s.d();
  const int n = g.graph.num_vertices();
  GadgetReport report;

  InvariantCheck count = named("vertex_count");
  if (n != s.num_vertices() || static_cast<int>(g.labels.size()) != n || g.d != d) {
    count.ok = false;
    count.detail = "expected " + std::to_string(s.num_vertices()) + " vertices, got " +
                   std::to_string(n);
    report.checks.push_back(count);
    return report;  // the remaining checks index by the canonical layout
  }
  report.checks.push_back(count);

  InvariantCheck labels = named("labels");
  for (Vertex v = 0; v < n; ++v) {
    if (!(g.labels[v] == s.label(v))) note(labels, v);
  }
  report.checks.push_back(labels);

  InvariantCheck layer = named("layer_degrees");
  for (Vertex v = 0; v < s.num_layer_vertices(); ++v) {
    if (g.graph.degree(v) != s.target_degree(v)) note(layer, v);
  }
  report.checks.push_back(layer);

  InvariantCheck special = named("special_nodes");
  for (int j = 0; j < 3; ++j) {
    const Vertex sj = s.special(j);
    if (g.graph.degree(sj) != d + 6 * r) note(special, sj);
    for (int k = 0; k < 3; ++k) {
      if (k != j && !g.graph.has_edge(sj, s.special(k))) note(special, sj);
    }
    for (int l = 0; l < s.num_layers(); ++l) {
      for (int i = 0; i < m; ++i) {
        const bool want = !(l == 2 * r && s.in_q(i));
        for (Vertex v : s.triple(l, i)) {
          if (g.graph.has_edge(sj, v) != want) note(special, v);
        }
      }
    }
  }
  report.checks.push_back(special);

  InvariantCheck q = named("q_size");
  int q_count = 0;
  int bit0 = 0;
  for (int i = 0; i < m; ++i) {
    bit0 += element_bit(i) == 0;
    for (Vertex v : s.triple(2 * r, i)) q_count += !g.graph.has_edge(s.special(0), v);
  }
  if (q_count != 3 * bit0) {
    q.ok = false;
    q.detail = "|Q| = " + std::to_string(q_count) + ", expected " + std::to_string(3 * bit0);
  }
  report.checks.push_back(q);

  InvariantCheck aux = named("aux_degrees");
  InvariantCheck induced = named("aux_induced_degree");
  int induced_max = 0;
  for (int a = 0; a < d; ++a) {
    const Vertex u = s.aux(a);
    if (g.graph.degree(u) < d + 6 * r + 3) note(aux, u);
    const int k = aux_neighbors(g, u);
    induced_max = std::max(induced_max, k);
    if (k > d - 3) note(induced, u);
  }
  induced.detail = "max " + std::to_string(induced_max) + ", bound " + std::to_string(d - 3);
  report.checks.push_back(aux);
  report.checks.push_back(induced);

  InvariantCheck ranges = named("deficiency_ranges");
  for (Vertex v = 0; v < s.num_core_vertices(); ++v) {
    const int target = s.target_degree(v);
    const int def = target - (g.graph.degree(v) - aux_neighbors(g, v));
    const VertexLabel l = s.label(v);
    int lo = 1;
    int hi = target;
    if (l.kind == VertexLabel::Kind::kLayer) {
      if (l.layer == 0) {
        lo = target - 5 - 2 * m;
        hi = target - 5;
      } else if (l.layer == 2 * r) {
        lo = d - 8;
        hi = d - 5;
      } else {
        lo = target - 8 - 2 * m;
        hi = target - 8;
      }
    }
    if (def <= 0 || def < lo || def > hi) note(ranges, v);
  }
  report.checks.push_back(ranges);
  return report;
}

nlohmann::json label_json(const VertexLabel& label) {
  switch (label.kind) {
    case VertexLabel::Kind::kLayer:
      return {{"kind", "layer"}, {"layer", label.layer}, {"index", label.index},
              {"copy", label.copy}};
    case VertexLabel::Kind::kSpecial:
      return {{"kind", "special"}, {"index", label.index}};
    case VertexLabel::Kind::kAux:
      return {{"kind", "aux"}, {"index", label.index}};
  }
  return {};
}

void write_gadget(const GadgetGraph& g, std::ostream& graph_out, std::ostream& sidecar_out) {
  write_graph_text(graph_out, g.graph);
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : g.labels) labels.push_back(label_json(l));
  nlohmann::json side = {{"m", g.m()}, {"r", g.r()}, {"d", g.d}, {"labels", labels}};
  sidecar_out << side.dump() << '\n';
}

GadgetGraph read_gadget(std::istream& graph_in, std::istream& sidecar_in) {
  GadgetGraph g;
  g.graph = read_graph_text(graph_in);
  nlohmann::json side = nlohmann::json::parse(sidecar_in);
  g.shape = GadgetShape{side.at("m").get<int>(), side.at("r").get<int>()};
  g.d = side.at("d").get<int>();
  if (g.shape.m < 1 || g.shape.r < 1 || g.d != g.shape.d()) {
    throw std::invalid_argument("sidecar parameters are inconsistent");
  }
  const auto& labels = side.at("labels");
  if (static_cast<int>(labels.size()) != g.graph.num_vertices()) {
    throw std::invalid_argument("sidecar label count does not match the graph");
  }
  for (const auto& j : labels) {
    VertexLabel l;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "layer") {
      l.kind = VertexLabel::Kind::kLayer;
      l.layer = j.at("layer").get<int>();
      l.copy = j.at("copy").get<int>();
    } else if (kind == "special") {
      l.kind = VertexLabel::Kind::kSpecial;
    } else if (kind == "aux") {
      l.kind = VertexLabel::Kind::kAux;
    } else {
      throw std::invalid_argument("unknown label kind " + kind);
    }
    l.index = j.at("index").get<int>();
    g.labels.push_back(l);
  }
  if (g.graph.num_vertices() == g.shape.num_vertices()) {
    const int core = g.shape.num_core_vertices();
    g.deficiency.resize(core);
    for (Vertex v = 0; v < core; ++v) {
      g.deficiency[v] = g.shape.target_degree(v) - (g.graph.degree(v) - aux_neighbors(g, v));
    }
    for (int a = 0; a < g.d; ++a) {
      g.aux_induced_max_degree =
          std::max(g.aux_induced_max_degree, aux_neighbors(g, g.shape.aux(a)));
    }
    g.aux_matchings = g.aux_induced_max_degree;
  }
  return g;
}

}  // namespace degenlab
