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

#include "commands.h"
#include "degenlab/bits.h"
#include "degenlab/hpc.h"

namespace degenlab::cli {

int cmd_hpc(const Config& config, const HpcOptions& opt, std::ostream& out) {
  if (opt.m < 4 || opt.m % 4 != 0 || opt.r < 1) {
    throw UsageError("--m must be a positive multiple of 4 and --r positive");
  }
  // 4m/r exceeds m for r < 4; every instance is then revealed.
  const int n_revealed = opt.revealed.value_or(std::min(opt.m, 4 * opt.m / opt.r));
  if (opt.misaligned && (n_revealed < 0 || n_revealed > opt.m)) {
    throw UsageError("--N must be in [0, m]");
  }
  const std::size_t per_instance = opt.m + 2 * ceil_log2(opt.m);
  const std::size_t bound = opt.misaligned ? 2 * n_revealed * per_instance
                                           : opt.r * per_instance + opt.r;

  Report report;
  report.command = "hpc";
  report.columns = {"trial", "bit_true", "bit", "correct", "bits_total", "rounds"};
  report.rows = parallel_map<nlohmann::json>(config.trials, [&](int t) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
    const MHPCInstance inst =
        opt.misaligned ? sample_bhpc(opt.m, opt.r, rng) : sample_bmhpc(opt.m, opt.r, rng);
    const HpcRun run = opt.misaligned ? misaligned_bhpc_protocol(inst, n_revealed, rng)
                                      : aligned_protocol(inst, {opt.r, Pair::kAB});
    const int truth = chase(inst).bit;
    return nlohmann::json{{"trial", t},
                          {"bit_true", truth},
                          {"bit", run.bit ? nlohmann::json(*run.bit) : nlohmann::json()},
                          {"correct", run.bit == truth},
                          {"bits_total", run.ledger.bits_total()},
                          {"rounds", run.ledger.rounds()}};
  });

  int correct = 0, abstained = 0, wrong = 0;
  std::size_t max_bits = 0;
  double mean_bits = 0;
  for (const auto& row : report.rows) {
    correct += row["correct"].get<bool>();
    abstained += row["bit"].is_null();
    wrong += !row["bit"].is_null() && !row["correct"].get<bool>();
    max_bits = std::max(max_bits, row["bits_total"].get<std::size_t>());
    mean_bits += row["bits_total"].get<double>();
  }
  const int trials = config.trials;
  report.summary = {{"protocol", opt.misaligned ? "misaligned" : "aligned"},
                    {"m", opt.m},
                    {"r", opt.r},
                    {"trials", trials},
                    // Abstentions count as a fair coin.
                    {"success_rate", trials ? (correct + 0.5 * abstained) / trials : 0.0},
                    {"exact_rate", trials ? double(correct) / trials : 0.0},
                    {"abstain_rate", trials ? double(abstained) / trials : 0.0},
                    {"wrong", wrong},
                    {"mean_bits", trials ? mean_bits / trials : 0.0},
                    {"max_bits", max_bits},
                    {"bits_bound", bound},
                    {"within_bound", max_bits <= bound}};
  if (opt.misaligned) report.summary["N"] = n_revealed;
  write_report(report, config, out);
  // The aligned protocol is exact; the misaligned one may abstain but never
  // answers wrongly.
  const bool ok = wrong == 0 && max_bits <= bound && (opt.misaligned || correct == trials);
  return ok ? kOk : kCheckFailed;
}

}  // namespace degenlab::cli
