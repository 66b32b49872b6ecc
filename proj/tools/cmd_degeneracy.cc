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

#include <algorithm>
#include <filesystem>

#include "commands.h"
#include "degenlab/degen_protocol.h"
#include "degenlab/graph.h"

namespace degenlab::cli {
namespace {

ProtocolKind parse_kind(const std::string& name) {
  if (name == "fast") return ProtocolKind::kFast;
  if (name == "sqrt") return ProtocolKind::kSqrt;
  throw UsageError("unknown protocol '" + name + "'");
}

// The certificates must agree with the claimed degeneracy.
bool certificates_ok(const Graph& g, const SearchResult& res) {
  if (!is_k_ordering(g, res.ordering, res.kappa)) return false;
  if (g.num_vertices() == 0) return true;
  if (res.core.empty()) return false;
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : res.core) in[v] = 1;
  for (Vertex v : res.core) {
    int inside = 0;
    for (Vertex u : g.neighbors(v)) inside += in[u];
    if (inside < res.kappa) return false;
  }
  return true;
}

nlohmann::json search_row(const Graph& g, const SearchResult& res, int peel_kappa) {
  return {{"n", g.num_vertices()},
          {"edges", g.num_edges()},
          {"kappa", res.kappa},
          {"peel_kappa", peel_kappa},
          {"match", res.kappa == peel_kappa && certificates_ok(g, res)},
          {"bits_total", res.ledger.bits_total()},
          {"decision_runs", res.decision_runs},
          {"updates_max", res.updates_max}};
}

}  // namespace

int cmd_degeneracy(const Config& config, const DegeneracyOptions& opt, std::ostream& out) {
  const ProtocolKind kind = parse_kind(opt.protocol);
  Report report;
  report.command = "degeneracy";

  if (!opt.graph.empty()) {
    if (!std::filesystem::is_regular_file(opt.graph)) {
      throw UsageError("cannot open graph file " + opt.graph);
    }
    Graph g;
    try {
      g = load_graph_file(opt.graph);
    } catch (const GraphFormatError& e) {
      throw UsageError(opt.graph + ": " + e.what());
    }
    const EdgePartition part = alternating_partition(g);
    if (opt.k) {
      if (*opt.k < 0) throw UsageError("--k must be nonnegative");
      const DecisionRun run = kind == ProtocolKind::kFast ? degen_decide_fast(part, *opt.k)
                                                          : degen_decide_sqrt(part, *opt.k);
      const bool oracle = accepted(peel_decision(g, *opt.k));
      report.columns = {"n", "k", "accepted", "oracle_accepted", "bits_total", "updates_max"};
      report.rows.push_back({{"n", g.num_vertices()},
                             {"k", *opt.k},
                             {"accepted", accepted(run.decision)},
                             {"oracle_accepted", oracle},
                             {"bits_total", run.ledger.bits_total()},
                             {"updates_max", run.updates_max()}});
      report.summary = {{"all_match", oracle == accepted(run.decision)}};
      write_report(report, config, out);
      return oracle == accepted(run.decision) ? kOk : kCheckFailed;
    }
    const SearchResult res = degen_search(part, kind);
    report.columns = {"n", "edges", "kappa", "peel_kappa", "match", "bits_total",
                      "decision_runs", "updates_max"};
    report.rows.push_back(search_row(g, res, degeneracy(g)));
    const bool ok = report.rows[0]["match"].get<bool>();
    report.summary = {{"all_match", ok}};
    write_report(report, config, out);
    return ok ? kOk : kCheckFailed;
  }

  if (opt.n < 1) throw UsageError("--n must be positive");
  if (opt.edge_p < 0 || opt.edge_p > 1) throw UsageError("--edge-p must be in [0, 1]");
  report.columns = {"trial", "n", "edges", "kappa", "peel_kappa", "match", "bits_total",
                    "decision_runs", "updates_max"};
  report.rows = parallel_map<nlohmann::json>(config.trials, [&](int t) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
    const Graph g = gnp_graph(opt.n, opt.edge_p, rng);
    const EdgePartition part = random_partition(g, rng);
    nlohmann::json row = search_row(g, degen_search(part, kind), degeneracy(g));
    row["trial"] = t;
    return row;
  });
  const auto matched = std::count_if(report.rows.begin(), report.rows.end(),
                                     [](const auto& r) { return r["match"].template get<bool>(); });
  report.summary = {{"trials", config.trials}, {"matched", matched},
                    {"all_match", matched == config.trials}};
  write_report(report, config, out);
  return matched == config.trials ? kOk : kCheckFailed;
}

}  // namespace degenlab::cli
