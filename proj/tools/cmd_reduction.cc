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

#include <filesystem>
#include <fstream>

#include "commands.h"
#include "degenlab/gadget.h"
#include "degenlab/reduction.h"
#include "degenlab/streaming.h"

namespace degenlab::cli {
namespace {

TieBreak parse_tie_break(const std::string& name) {
  if (name == "smallest") return TieBreak::kSmallestId;
  if (name == "largest") return TieBreak::kLargestId;
  if (name == "random") return TieBreak::kRandom;
  throw UsageError("unknown tie-break '" + name + "'");
}

MHPCInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  MHPCInstance inst = instance_from_json(j);
  return inst.m % 4 == 0 ? inst : pad_to_multiple_of_four(inst);
}

// Writes the gadget, reads it back and re-verifies it.
bool emit_gadget(const MHPCInstance& inst, const std::filesystem::path& dir, int trial) {
  const GadgetGraph g = build_gadget(inst);
  const auto stem = dir / ("gadget_" + std::to_string(trial));
  {
    std::ofstream graph_out(stem.string() + ".txt");
    std::ofstream side_out(stem.string() + ".json");
    if (!graph_out || !side_out) throw UsageError("cannot write into " + dir.string());
    write_gadget(g, graph_out, side_out);
  }
  std::ifstream graph_in(stem.string() + ".txt");
  std::ifstream side_in(stem.string() + ".json");
  const GadgetGraph back = read_gadget(graph_in, side_in);
  return back.graph == g.graph && back.labels == g.labels && verify_gadget(back).ok();
}

}  // namespace

int cmd_reduction(const Config& config, const ReductionOptions& opt, std::ostream& out) {
  const TieBreak tie = parse_tie_break(opt.tie_break);
  if (opt.streaming != "none" && opt.streaming != "store-all" && opt.streaming != "naive") {
    throw UsageError("unknown streaming algorithm '" + opt.streaming + "'");
  }
  if (opt.instance.empty() && (opt.m < 4 || opt.m % 4 != 0 || opt.r < 1)) {
    throw UsageError("--m must be a positive multiple of 4 and --r positive");
  }
  int fixed_passes = 0;
  if (opt.passes != "auto") {
    try {
      fixed_passes = std::stoi(opt.passes);
    } catch (const std::exception&) {
      throw UsageError("--p must be 'auto' or a positive integer");
    }
    if (fixed_passes < 1) throw UsageError("--p must be positive");
  }
  if (!opt.emit_gadget.empty()) std::filesystem::create_directories(opt.emit_gadget);

  const MHPCInstance from_file = opt.instance.empty() ? MHPCInstance{} : load_instance(opt.instance);
  const int trials = opt.instance.empty() ? config.trials : 1;

  Report report;
  report.command = "reduction";
  report.columns = {"trial", "m", "r", "d", "bit_true", "kappa", "split_ok", "trace_ok",
                    "special_peel_ok"};
  if (!opt.emit_gadget.empty()) report.columns.push_back("gadget_reload_ok");
  if (opt.streaming != "none") {
    for (const char* c : {"streaming_bit", "passes", "phases", "phases_ok", "max_state_bits",
                          "bits_total", "ledger_ok", "edge_order_ok"}) {
      report.columns.push_back(c);
    }
  }

  report.rows = parallel_map<nlohmann::json>(trials, [&](int t) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
    const MHPCInstance inst = opt.instance.empty() ? sample_bmhpc(opt.m, opt.r, rng) : from_file;
    const ReductionReport rep = trace_invariants(inst, {tie, derive_seed(config.seed, t)});
    nlohmann::json row = rep.to_json();
    row.erase("trace");
    row.erase("phases");
    row.erase("max_state_bits");
    row.erase("bits_total");
    row["trial"] = t;
    row["m"] = inst.m;
    row["r"] = inst.r;
    row["trace_ok"] = rep.trace_ok;
    row["special_peel_ok"] = rep.special_peel_ok;
    bool ok = rep.split_ok && rep.trace_ok && rep.special_peel_ok;
    if (!opt.emit_gadget.empty()) {
      row["gadget_reload_ok"] = emit_gadget(inst, opt.emit_gadget, t);
      ok = ok && row["gadget_reload_ok"].get<bool>();
    }
    if (opt.streaming != "none") {
      const bool naive = opt.streaming == "naive";
      const int passes =
          fixed_passes ? fixed_passes : (naive ? GadgetShape{inst.m, inst.r}.num_vertices() : 1);
      const StreamingRun run = simulate_streaming_reduction(
          inst, naive ? StreamingFactory(make_naive_peeler) : StreamingFactory(make_store_all),
          passes);
      row["streaming_bit"] = run.bit;
      row["passes"] = run.passes;
      row["phases"] = run.phases;
      row["phases_ok"] = run.phases == 2 * run.passes - 1;
      row["max_state_bits"] = run.max_state_bits;
      row["bits_total"] = run.ledger.bits_total();
      row["ledger_ok"] =
          run.ledger.bits_total() == run.state_bits_total + run.degree_table_bits;
      row["edge_order_ok"] = run.edge_order_consistent;
      ok = ok && run.bit == rep.bit_true && row["phases_ok"].get<bool>() &&
           row["ledger_ok"].get<bool>() && run.edge_order_consistent;
    }
    row["ok"] = ok;
    return row;
  });

  int failures = 0;
  for (const auto& row : report.rows) failures += !row["ok"].get<bool>();
  report.summary = {{"trials", trials}, {"failures", failures}};
  write_report(report, config, out);
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace degenlab::cli
