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

#include <sstream>

#include <gtest/gtest.h>

#include "degenlab/gadget.h"

namespace degenlab {
namespace {

bool contains(const ElementSet& s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

Graph without_edge(const Graph& g, std::size_t index) {
  auto edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
  return Graph(g.num_vertices(), std::move(edges));
}

TEST(Shape, Sizes) {
  GadgetShape s{4, 1};
  EXPECT_EQ(s.d(), 36);
  EXPECT_EQ(s.num_vertices(), 75);
  GadgetShape t{8, 3};
  EXPECT_EQ(t.d(), 6 * 8 * 3 + 3 * 8);
  EXPECT_EQ(t.num_vertices(), 3 * 8 * 7 + 3 + t.d());
}

TEST(Build, SmallestInstance) {
  Rng rng(1);
  GadgetGraph g = build_gadget(sample_bmhpc(4, 1, rng));
  EXPECT_EQ(g.d, 36);
  EXPECT_EQ(g.graph.num_vertices(), 75);
  GadgetReport report = verify_gadget(g);
  EXPECT_TRUE(report.ok()) << report.to_json().dump();
}

TEST(Build, DegreeTargetsAcrossShapes) {
  Rng rng(2);
  for (int m : {4, 8}) {
    for (int r : {1, 2, 3}) {
      for (int t = 0; t < 5; ++t) {
        GadgetGraph g = build_gadget(sample_bmhpc(m, r, rng));
        const GadgetShape& s = g.shape;
        const int d = g.d;
        // Degree list, independent of target_degree().
        for (int i = 0; i < m; ++i) {
          for (Vertex v : s.triple(0, i)) EXPECT_EQ(g.graph.degree(v), i == 0 ? d - 3 : d);
        }
        for (int l = 1; l <= 2 * r; ++l) {
          for (int i = 0; i < m; ++i) {
            for (Vertex v : s.triple(l, i)) EXPECT_EQ(g.graph.degree(v), l % 2 ? d - 1 : d);
          }
        }
        for (int j = 0; j < 3; ++j) EXPECT_EQ(g.graph.degree(s.special(j)), d + 6 * r);
        int induced = 0;
        for (int a = 0; a < d; ++a) {
          const Vertex u = s.aux(a);
          EXPECT_GE(g.graph.degree(u), d + 6 * r + 3);
          int k = 0;
          for (Vertex w : g.graph.neighbors(u)) k += w >= s.num_core_vertices();
          induced = std::max(induced, k);
        }
        EXPECT_LE(induced, d - 3);
        EXPECT_EQ(induced, g.aux_induced_max_degree);
        for (int def : g.deficiency) EXPECT_GT(def, 0);
        EXPECT_TRUE(verify_gadget(g).ok());
      }
    }
  }
}

TEST(Build, IntersectionSignature) {
  Rng rng(3);
  MHPCInstance inst = sample_bmhpc(8, 3, rng);
  GadgetGraph g = build_gadget(inst);
  const GadgetShape& s = g.shape;
  for (int j = 1; j <= inst.r; ++j) {
    const auto& lhs = j % 2 ? inst.a : inst.c;
    const auto& rhs = j % 2 ? inst.b : inst.d;
    for (int i = 0; i < inst.m; ++i) {
      const ElementSet& p = lhs[j - 1][i];
      const ElementSet& q = rhs[j - 1][i];
      for (int y = 0; y < inst.m; ++y) {
        int edges = 0;
        for (Vertex u : s.triple(2 * (j - 1), i)) {
          for (Vertex v : s.triple(2 * j - 1, y)) edges += g.graph.has_edge(u, v);
        }
        const int expect = contains(p, y) && contains(q, y)   ? 4
                           : contains(p, y) != contains(q, y) ? 2
                                                              : 0;
        EXPECT_EQ(edges, expect) << "j=" << j << " i=" << i << " y=" << y;
      }
    }
  }
}

TEST(Build, QHoldsTheBitZeroTriples) {
  Rng rng(4);
  GadgetGraph g = build_gadget(sample_bmhpc(8, 2, rng));
  int q = 0;
  for (int i = 0; i < 8; ++i) {
    for (Vertex v : g.shape.triple(4, i)) q += !g.graph.has_edge(g.shape.special(0), v);
  }
  EXPECT_EQ(q, 3 * 8 / 2);
}

TEST(Build, PaddedFigureOne) {
  GadgetGraph g = build_gadget(pad_to_multiple_of_four(figure_one_instance()));
  for (Vertex v : g.shape.triple(0, 0)) EXPECT_EQ(g.graph.degree(v), g.d - 3);
  EXPECT_TRUE(verify_gadget(g).ok());
}

TEST(Build, RejectsUnpaddedUniverse) {
  EXPECT_THROW(build_gadget(figure_one_instance()), std::invalid_argument);
}

TEST(Verify, RemovedEdgeIsCaught) {
  Rng rng(5);
  GadgetGraph g = build_gadget(sample_bmhpc(4, 1, rng));
  for (std::size_t idx : {std::size_t{0}, g.graph.num_edges() / 2, g.graph.num_edges() - 1}) {
    GadgetGraph broken = g;
    broken.graph = without_edge(g.graph, idx);
    GadgetReport report = verify_gadget(broken);
    EXPECT_FALSE(report.ok());
    const bool degree_flagged = !report.check("layer_degrees").ok ||
                                !report.check("special_nodes").ok ||
                                !report.check("aux_degrees").ok;
    EXPECT_TRUE(degree_flagged) << report.to_json().dump();
  }
}

TEST(Verify, WrongQIsCaught) {
  Rng rng(6);
  MHPCInstance inst = sample_bmhpc(4, 1, rng);
  GadgetOptions wrong;
  wrong.excluded_bit = 1;
  GadgetGraph g = build_gadget(inst, wrong);
  GadgetReport report = verify_gadget(g);
  EXPECT_FALSE(report.check("special_nodes").ok);
  EXPECT_FALSE(report.check("special_nodes").counterexamples.empty());
}

TEST(Verify, WrongVertexCountStopsEarly) {
  Rng rng(7);
  GadgetGraph g = build_gadget(sample_bmhpc(4, 1, rng));
  g.graph = Graph(10, {});
  GadgetReport report = verify_gadget(g);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.check("vertex_count").ok);
}

TEST(AuxPadding, RejectsOverfullCore) {
  GadgetShape s{4, 1};
  std::vector<int> degrees(s.num_core_vertices(), 0);
  degrees[0] = s.d();  // target for vertex 0 is d - 3
  EXPECT_THROW(gadget_aux_padding(s, degrees), GadgetError);
}

TEST(Io, RoundTrip) {
  Rng rng(8);
  GadgetGraph g = build_gadget(sample_bmhpc(8, 2, rng));
  std::stringstream graph_text, sidecar;
  write_gadget(g, graph_text, sidecar);
  auto side = nlohmann::json::parse(sidecar.str());
  EXPECT_EQ(side["m"], 8);
  EXPECT_EQ(side["r"], 2);
  EXPECT_EQ(side["d"], g.d);
  EXPECT_EQ(side["labels"].size(), static_cast<std::size_t>(g.graph.num_vertices()));
  std::stringstream side_in(sidecar.str());
  GadgetGraph back = read_gadget(graph_text, side_in);
  EXPECT_EQ(back.graph, g.graph);
  EXPECT_EQ(back.labels, g.labels);
  EXPECT_EQ(back.deficiency, g.deficiency);
  EXPECT_TRUE(verify_gadget(back).ok());
}

}  // namespace
}  // namespace degenlab
