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

#ifndef DEGENLAB_TOOLS_COMMANDS_H_
#define DEGENLAB_TOOLS_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>

#include "runner.h"

namespace degenlab::cli {

struct DegeneracyOptions {
  int n = 64;
  double edge_p = 0.25;
  std::string graph;       // decide / search on one file instead of a sweep
  std::optional<int> k;    // with --graph: one decision at this k
  std::string protocol = "fast";  // fast | sqrt
};

struct ReductionOptions {
  int m = 4;
  int r = 1;
  std::string instance;     // JSON instance file instead of sampling
  std::string emit_gadget;  // directory for gadget files
  std::string streaming = "none";  // none | store-all | naive
  std::string passes = "auto";
  std::string tie_break = "smallest";  // smallest | largest | random
};

struct HpcOptions {
  int m = 8;
  int r = 2;
  bool misaligned = false;
  std::optional<int> revealed;  // N; defaults to 4m/r
};

struct InfoOptions {
  long long fuzz_lambda = 10000;
  bool distinguisher = false;
  double alpha = 0.1;
  double beta = 1.0;
  double gamma = 0.05;
};

struct SiSolverOptions {
  double p = 0.5;
  int m = 64;
  double gamma = 0.5;
  std::optional<double> eps;  // defaults to the solver's analytic Lambda
  std::string solver = "reveal";  // reveal | silent
  int calibration_factor = 10;
};

int cmd_degeneracy(const Config& config, const DegeneracyOptions& opt, std::ostream& out);
int cmd_reduction(const Config& config, const ReductionOptions& opt, std::ostream& out);
int cmd_hpc(const Config& config, const HpcOptions& opt, std::ostream& out);
int cmd_info(const Config& config, const InfoOptions& opt, std::ostream& out);
int cmd_sisolver(const Config& config, const SiSolverOptions& opt, std::ostream& out);

// Parses argv and dispatches; returns the process exit code. Diagnostics go
// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degenlab::cli

#endif  // DEGENLAB_TOOLS_COMMANDS_H_
