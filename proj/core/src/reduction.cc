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

#include "degenlab/reduction.h"

#include <algorithm>

namespace degenlab {
namespace {

bool split_holds(int bit, int kappa, int d) {
  return bit == 0 ? kappa >= d - 2 : kappa <= d - 3;
}

}  // namespace

nlohmann::json ReductionReport::to_json() const {
  nlohmann::json trace_json = nlohmann::json::array();
  for (const auto& b : trace) {
    trace_json.push_back(
        {{"ell", b.ell}, {"ok", b.ok}, {"max_degree_at_removal", b.max_degree_at_removal}});
  }
  return {{"bit_true", bit_true},     {"kappa", kappa},
          {"d", d},                   {"split_ok", split_ok},
          {"trace", trace_json},      {"phases", phases},
          {"max_state_bits", max_state_bits}, {"bits_total", bits_total}};
}

std::array<Vertex, 3> pointer_triple(const GadgetShape& shape, const PointerPath& path,
                                     int ell) {
  return shape.triple(ell, path.z.at((ell + 1) / 2));
}

ReductionReport verify_split(const MHPCInstance& inst) {
  const GadgetGraph g = build_gadget(inst);
  ReductionReport report;
  report.bit_true = chase(inst).bit;
  report.kappa = degeneracy(g.graph);
  report.d = g.d;
  report.split_ok = split_holds(report.bit_true, report.kappa, report.d);
  return report;
}

ReductionReport trace_invariants(const MHPCInstance& inst, const PeelOptions& options) {
  const GadgetGraph g = build_gadget(inst);
  const GadgetShape& s = g.shape;
  const PointerPath path = chase(inst);
  const PeelTrace peeled = peel(g.graph, options);
  const int d = g.d;
  const int r = s.r;

  ReductionReport report;
  report.bit_true = path.bit;
  report.kappa = peeled.degeneracy;
  report.d = d;
  report.split_ok = split_holds(report.bit_true, report.kappa, d);

  std::vector<int> residual(g.graph.num_vertices());
  for (Vertex v = 0; v < g.graph.num_vertices(); ++v) residual[v] = g.graph.degree(v);
  std::vector<char> gone(g.graph.num_vertices(), 0);
  auto remove = [&](Vertex v) {
    gone[v] = 1;
    for (Vertex u : g.graph.neighbors(v)) --residual[u];
  };

  for (int ell = 0; ell <= 2 * r; ++ell) {
    TraceBlock b;
    b.ell = ell;
    b.special_degree = residual[s.special(0)];
    b.min_aux_degree = residual[s.aux(0)];
    for (int a = 0; a < d; ++a) b.min_aux_degree = std::min(b.min_aux_degree, residual[s.aux(a)]);
    for (int j = 0; j < 3; ++j) {
      if (residual[s.special(j)] != d + 6 * r - 3 * ell) b.ok = false;
    }
    if (b.min_aux_degree < d + 6 * r + 3 - 3 * ell) b.ok = false;

    const auto z = pointer_triple(s, path, ell);
    b.expected.assign(z.begin(), z.end());
    for (int k = 0; k < 3; ++k) {
      const std::size_t pos = 3 * ell + k;
      b.peeled.push_back(peeled.order[pos]);
      b.max_degree_at_removal = std::max(b.max_degree_at_removal, peeled.degree_at_removal[pos]);
      remove(peeled.order[pos]);
    }
    std::sort(b.peeled.begin(), b.peeled.end());
    if (b.peeled != b.expected || b.max_degree_at_removal > d - 3) b.ok = false;
    report.trace_ok = report.trace_ok && b.ok;
    report.trace.push_back(std::move(b));
  }

  if (path.bit == 1) {
    std::vector<Vertex> next;
    int worst = 0;
    for (int k = 0; k < 3; ++k) {
      const std::size_t pos = 6 * r + 3 + k;
      next.push_back(peeled.order[pos]);
      worst = std::max(worst, peeled.degree_at_removal[pos]);
    }
    std::sort(next.begin(), next.end());
    report.special_peel_ok =
        next == std::vector<Vertex>{s.special(0), s.special(1), s.special(2)} && worst <= d - 3;
  }
  return report;
}

}  // namespace degenlab
