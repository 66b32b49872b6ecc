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
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.h"
#include "degenlab/gadget.h"
#include "degenlab/graph.h"

namespace degenlab::cli {
namespace {

void add_common(CLI::App* sub, Config& config, int default_trials) {
  config.trials = default_trials;
  sub->add_option("--seed", config.seed, "Global seed; trials derive their own")
      ->capture_default_str();
  sub->add_option("--trials", config.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", config.out, "Output file (default: stdout)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degeneracy, pointer-chasing and reduction experiments"};
  app.name("degenlab");
  app.require_subcommand(1);

  Config deg_cfg, red_cfg, hpc_cfg, info_cfg, si_cfg;
  DegeneracyOptions deg;
  ReductionOptions red;
  HpcOptions hpc;
  InfoOptions info;
  SiSolverOptions si;

  auto* c_deg = app.add_subcommand("degeneracy", "Protocol degeneracy against peeling");
  add_common(c_deg, deg_cfg, 1);
  c_deg->add_option("--n", deg.n, "Vertices per random graph")->capture_default_str();
  c_deg->add_option("--edge-p", deg.edge_p, "Edge probability")->capture_default_str();
  c_deg->add_option("--graph", deg.graph, "Graph file instead of random graphs");
  c_deg->add_option("--k", deg.k, "With --graph: decide degeneracy <= k");
  c_deg->add_option("--protocol", deg.protocol, "fast or sqrt")
      ->check(CLI::IsMember({"fast", "sqrt"}))
      ->capture_default_str();

  auto* c_red = app.add_subcommand("reduction", "Gadget split, peel trace and streaming");
  add_common(c_red, red_cfg, 1);
  c_red->add_option("--m", red.m, "Universe size (multiple of 4)")->capture_default_str();
  c_red->add_option("--r", red.r, "Layers")->capture_default_str();
  c_red->add_option("--instance", red.instance, "Instance JSON instead of sampling");
  c_red->add_option("--emit-gadget", red.emit_gadget, "Write gadget files to this directory");
  c_red->add_option("--streaming", red.streaming, "none, store-all or naive")
      ->check(CLI::IsMember({"none", "store-all", "naive"}))
      ->capture_default_str();
  c_red->add_option("--p", red.passes, "Pass budget or 'auto'")->capture_default_str();
  c_red->add_option("--tie-break", red.tie_break, "smallest, largest or random")
      ->check(CLI::IsMember({"smallest", "largest", "random"}))
      ->capture_default_str();

  auto* c_hpc = app.add_subcommand("hpc", "Pointer-chasing protocols");
  add_common(c_hpc, hpc_cfg, 1);
  c_hpc->add_option("--m", hpc.m, "Universe size (multiple of 4)")->capture_default_str();
  c_hpc->add_option("--r", hpc.r, "Layers")->capture_default_str();
  c_hpc->add_flag("--misaligned", hpc.misaligned, "CD-first schedule on BHPC instances");
  c_hpc->add_option("--N", hpc.revealed, "Instances pre-solved in round 1 (default min(m, 4m/r))");

  auto* c_info = app.add_subcommand("info", "Information-measure property campaigns");
  add_common(c_info, info_cfg, 2000);
  c_info->add_option("--fuzz-lambda", info.fuzz_lambda, "Random trials per property")
      ->capture_default_str();
  c_info->add_flag("--distinguisher", info.distinguisher, "Bernoulli distinguisher error rate");
  c_info->add_option("--alpha", info.alpha)->capture_default_str();
  c_info->add_option("--beta", info.beta)->capture_default_str();
  c_info->add_option("--gamma", info.gamma)->capture_default_str();

  auto* c_si = app.add_subcommand("sisolver", "Exact Set-Intersection from an eps-solver");
  add_common(c_si, si_cfg, 200);
  c_si->add_option("--p", si.p, "Reveal probability")->capture_default_str();
  c_si->add_option("--m", si.m, "Universe size (multiple of 4)")->capture_default_str();
  c_si->add_option("--gamma", si.gamma)->capture_default_str();
  c_si->add_option("--eps", si.eps, "Solver advantage (default: analytic)");
  c_si->add_option("--solver", si.solver, "reveal or silent")
      ->check(CLI::IsMember({"reveal", "silent"}))
      ->capture_default_str();
  c_si->add_option("--calibration-factor", si.calibration_factor)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (c_deg->parsed()) return cmd_degeneracy(deg_cfg, deg, out);
    if (c_red->parsed()) return cmd_reduction(red_cfg, red, out);
    if (c_hpc->parsed()) return cmd_hpc(hpc_cfg, hpc, out);
    if (c_info->parsed()) return cmd_info(info_cfg, info, out);
    if (c_si->parsed()) return cmd_sisolver(si_cfg, si, out);
  } catch (const GraphFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace degenlab::cli
