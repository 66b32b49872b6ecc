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

#include "runner.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace degenlab::cli {
namespace {

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return v.dump();
}

}  // namespace

int worker_count(int jobs) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DEGENLAB_WORKERS")) {
    const int requested = std::atoi(env);
    if (requested > 0) workers = requested;
  }
  return std::max(1, std::min(workers, jobs));
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  const int workers = worker_count(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void write_report(const Report& report, const Config& config, std::ostream& fallback) {
  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) throw std::runtime_error("cannot open " + config.out + " for writing");
  }
  std::ostream& out = config.out.empty() ? fallback : file;
  if (config.format == "csv") {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      out << (c ? "," : "") << report.columns[c];
    }
    out << '\n';
    for (const auto& row : report.rows) {
      for (std::size_t c = 0; c < report.columns.size(); ++c) {
        const auto it = row.find(report.columns[c]);
        out << (c ? "," : "") << (it == row.end() ? "" : csv_cell(*it));
      }
      out << '\n';
    }
  } else {
    nlohmann::json doc = {{"command", report.command}, {"rows", report.rows},
                          {"summary", report.summary}};
    out << doc.dump(2) << '\n';
  }
}

}  // namespace degenlab::cli
