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

// Shared plumbing for the subcommands: configuration, ordered parallel trial
// execution and JSON / CSV output.

#ifndef DEGENLAB_TOOLS_RUNNER_H_
#define DEGENLAB_TOOLS_RUNNER_H_

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace degenlab::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

// Usage or input problems; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t seed = 1;
  int trials = 1;
  std::string format = "json";
  std::string out;  // empty = stdout
};

// DEGENLAB_WORKERS if set to a positive integer, else the hardware thread
// count; never more than `jobs`.
int worker_count(int jobs);

// Runs fn(0..count-1) on a worker pool. Results come back in index order, so
// output does not depend on scheduling. The first exception (by index) is
// rethrown.
void parallel_for(int count, const std::function<void(int)>& fn);

template <class T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& fn) {
  std::vector<std::optional<T>> slots(count);
  parallel_for(count, [&](int i) { slots[i] = fn(i); });
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Report {
  std::string command;
  std::vector<std::string> columns;  // CSV column order
  std::vector<nlohmann::json> rows;
  nlohmann::json summary = nlohmann::json::object();
};

// JSON: {command, rows, summary}. CSV: header plus one line per row.
void write_report(const Report& report, const Config& config, std::ostream& fallback);

}  // namespace degenlab::cli

#endif  // DEGENLAB_TOOLS_RUNNER_H_
