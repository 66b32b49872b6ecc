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

#include <random>

#include "commands.h"
#include "degenlab/info.h"

namespace degenlab::cli {

int cmd_info(const Config& config, const InfoOptions& opt, std::ostream& out) {
  Report report;
  report.command = "info";
  if (opt.distinguisher) {
    if (!(opt.alpha > 0 && opt.alpha <= 1) || !(opt.beta > 0 && opt.beta <= 1) ||
        !(opt.gamma > 0 && opt.gamma < 1) || (1 + opt.beta) * opt.alpha > 1) {
      throw UsageError("need 0 < alpha, beta <= 1, (1 + beta) alpha <= 1, 0 < gamma < 1");
    }
    // Even trials sample at rate alpha, odd ones at (1 + beta) alpha.
    report.columns = {"trial", "rate", "verdict", "correct"};
    report.rows = parallel_map<nlohmann::json>(config.trials, [&](int t) {
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
      const bool high = t % 2 == 1;
      const double rate = high ? (1 + opt.beta) * opt.alpha : opt.alpha;
      std::bernoulli_distribution coin(rate);
      const RateVerdict v =
          bernoulli_distinguisher([&] { return coin(rng); }, opt.alpha, opt.beta, opt.gamma);
      return nlohmann::json{{"trial", t},
                            {"rate", rate},
                            {"verdict", v == RateVerdict::kHigh ? "high" : "low"},
                            {"correct", (v == RateVerdict::kHigh) == high}};
    });
    int errors = 0;
    for (const auto& row : report.rows) errors += !row["correct"].get<bool>();
    const double rate = config.trials ? double(errors) / config.trials : 0.0;
    report.summary = {{"samples_per_trial", distinguisher_samples(opt.alpha, opt.beta, opt.gamma)},
                      {"trials", config.trials},
                      {"errors", errors},
                      {"error_rate", rate},
                      {"gamma", opt.gamma}};
    write_report(report, config, out);
    return rate <= opt.gamma ? kOk : kCheckFailed;
  }

  if (opt.fuzz_lambda < 1) throw UsageError("--fuzz-lambda must be positive");
  report.columns = {"property", "trials", "violations", "worst_slack"};
  std::int64_t violations = 0;
  for (const auto& r : fuzz_lambda_properties(opt.fuzz_lambda, config.seed)) {
    report.rows.push_back({{"property", r.name},
                           {"trials", r.trials},
                           {"violations", r.violations},
                           {"worst_slack", r.worst_slack}});
    violations += r.violations;
  }
  report.summary = {{"violations", violations}};
  write_report(report, config, out);
  return violations == 0 ? kOk : kCheckFailed;
}

}  // namespace degenlab::cli
