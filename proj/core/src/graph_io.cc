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

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "degenlab/graph.h"

namespace degenlab {
namespace {

// Parses exactly `count` nonnegative decimal integers from a line.
bool parse_ints(const std::string& line, int count, long long* out) {
  std::istringstream in(line);
  for (int i = 0; i < count; ++i) {
    if (!(in >> out[i]) || out[i] < 0) return false;
  }
  std::string rest;
  return !(in >> rest);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph read_graph_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw GraphFormatError(line_no + 1, "missing header \"n m\"");
  long long header[2];
  if (!parse_ints(line, 2, header)) {
    throw GraphFormatError(line_no, "expected header \"n m\"");
  }
  const long long n = header[0];
  const long long m = header[1];
  if (n > (1LL << 30)) throw GraphFormatError(line_no, "vertex count too large");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw GraphFormatError(line_no + 1, "expected " + std::to_string(m) +
                                              " edges, found " +
                                              std::to_string(i));
    }
    long long uv[2];
    if (!parse_ints(line, 2, uv)) {
      throw GraphFormatError(line_no, "expected edge \"u v\"");
    }
    if (uv[0] == uv[1]) {
      throw GraphFormatError(line_no, "self-loop at vertex " + std::to_string(uv[0]));
    }
    if (uv[0] > uv[1]) {
      throw GraphFormatError(line_no, "edge endpoints must satisfy u < v");
    }
    if (uv[1] >= n) {
      throw GraphFormatError(line_no, "vertex " + std::to_string(uv[1]) +
                                          " out of range for n = " +
                                          std::to_string(n));
    }
    Edge e{static_cast<int>(uv[0]), static_cast<int>(uv[1])};
    if (!seen.insert(e).second) {
      throw GraphFormatError(line_no, "duplicate edge " + std::to_string(e.first) +
                                          " " + std::to_string(e.second));
    }
    edges.push_back(e);
  }
  if (next_line()) throw GraphFormatError(line_no, "unexpected trailing content");
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace degenlab
