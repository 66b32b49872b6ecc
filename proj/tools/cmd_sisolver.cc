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

#include "commands.h"
#include "degenlab/si_solver.h"

namespace degenlab::cli {

int cmd_sisolver(const Config& config, const SiSolverOptions& opt, std::ostream& out) {
  if (opt.m < 8 || opt.m % 4 != 0) throw UsageError("--m must be a multiple of 4, at least 8");
  std::unique_ptr<EpsSolver> solver;
  if (opt.solver == "reveal") {
    if (!(opt.p >= 0 && opt.p <= 1)) throw UsageError("--p must be in [0, 1]");
    solver = make_reveal_solver(opt.p);
  } else if (opt.solver == "silent") {
    solver = make_silent_solver();
  } else {
    throw UsageError("unknown solver '" + opt.solver + "'");
  }
  SolverConfig sc;
  sc.gamma = opt.gamma;
  sc.calibration_factor = opt.calibration_factor;
  sc.eps = opt.eps.value_or(*solver->analytic_lambda(opt.m));
  // The silent solver has Lambda = 0; run it at the smallest admissible eps.
  if (!opt.eps && sc.eps < 8.0 / opt.m) sc.eps = 8.0 / opt.m;
  if (!(sc.gamma > 0 && sc.gamma < 1)) throw UsageError("--gamma must be in (0, 1)");
  if (!(sc.eps >= 8.0 / opt.m && sc.eps <= 1)) throw UsageError("--eps must be in [8/m, 1]");

  Rng calib_rng(derive_seed(config.seed, 0));
  const Calibration cal = calibrate(*solver, opt.m, sc, calib_rng);

  Report report;
  report.command = "sisolver";
  report.columns = {"trial", "success", "failure_kind", "s_size", "target_below_tau"};
  report.rows = parallel_map<nlohmann::json>(config.trials, [&](int t) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t) + 1));
    const SetIntInstance si = sample_setint(opt.m, rng);
    const ExactResult res = exact_from_eps(si, *solver, sc, cal, rng);
    return nlohmann::json{{"trial", t},
                          {"success", res.element && *res.element == intersection_element(si)},
                          {"failure_kind", failure_name(res.failure)},
                          {"s_size", res.s_size},
                          {"s_others", res.s_others},
                          {"target_below_tau", res.target_below_tau}};
  });

  ExperimentSummary sum;
  sum.m = opt.m;
  sum.gamma = sc.gamma;
  sum.eps = sc.eps;
  sum.k_rounds = cal.k_rounds;
  sum.tau = cal.tau;
  sum.trials = config.trials;
  const int cutoff = static_cast<int>(sc.gamma * sc.gamma * opt.m / 10);
  for (const auto& row : report.rows) {
    sum.successes += row["success"].get<bool>();
    sum.overflow += row["failure_kind"] == "overflow";
    sum.empty_intersection += row["failure_kind"] == "empty_intersection";
    sum.below_tau += row["target_below_tau"].get<bool>();
    sum.others_over_cutoff += row["s_others"].get<int>() > cutoff;
  }
  report.summary = sum.to_json();
  write_report(report, config, out);
  return kOk;
}

}  // namespace degenlab::cli
