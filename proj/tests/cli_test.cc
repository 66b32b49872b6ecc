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
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.h"
#include "degenlab/gadget.h"

namespace degenlab::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "degenlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("degenlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Cli, DegeneracySweep) {
  Result r = run({"degeneracy", "--n", "64", "--trials", "20", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["command"], "degeneracy");
  ASSERT_EQ(j["rows"].size(), 20u);
  for (const auto& row : j["rows"]) EXPECT_TRUE(row["match"].get<bool>());
  EXPECT_TRUE(j["summary"]["all_match"].get<bool>());
}

TEST(Cli, RerunsAreByteIdentical) {
  auto a = run({"degeneracy", "--n", "40", "--trials", "8", "--seed", "3"});
  auto b = run({"degeneracy", "--n", "40", "--trials", "8", "--seed", "3"});
  EXPECT_EQ(a.out, b.out);
  auto c = run({"degeneracy", "--n", "40", "--trials", "8", "--seed", "4"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, CsvHasHeaderAndRows) {
  Result r = run({"hpc", "--m", "8", "--r", "2", "--trials", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "trial,bit_true,bit,correct,bits_total,rounds");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5);
}

TEST(Cli, GraphFileDecision) {
  TempDir dir;
  const fs::path file = dir.path() / "k4.txt";
  std::ofstream(file) << "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  Result yes = run({"degeneracy", "--graph", file.string(), "--k", "3"});
  ASSERT_EQ(yes.code, 0) << yes.err;
  EXPECT_EQ(json_of(yes)["rows"].size(), 1u);
  Result search = run({"degeneracy", "--graph", file.string()});
  ASSERT_EQ(search.code, 0) << search.err;
  EXPECT_EQ(json_of(search)["rows"][0]["kappa"], 3);
}

TEST(Cli, MalformedGraphIsUsageError) {
  TempDir dir;
  const fs::path file = dir.path() / "bad.txt";
  std::ofstream(file) << "3 2\n0 1\n2 2\n";
  Result r = run({"degeneracy", "--graph", file.string(), "--k", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  Result missing = run({"degeneracy", "--graph", (dir.path() / "none.txt").string()});
  EXPECT_EQ(missing.code, 2);
}

TEST(Cli, ParseErrorsAndHelp) {
  EXPECT_EQ(run({"degeneracy", "--no-such-flag"}).code, 2);
  EXPECT_EQ(run({"hpc", "--m", "eight"}).code, 2);
  EXPECT_EQ(run({"hpc", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ReductionSweep) {
  Result r = run({"reduction", "--m", "4", "--r", "1", "--trials", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  ASSERT_EQ(j["rows"].size(), 10u);
  for (const auto& row : j["rows"]) {
    EXPECT_TRUE(row["split_ok"].get<bool>());
    EXPECT_TRUE(row["trace_ok"].get<bool>());
  }
}

TEST(Cli, EmitGadgetReloads) {
  TempDir dir;
  Result r = run({"reduction", "--m", "8", "--r", "3", "--trials", "2", "--emit-gadget",
                  dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  int graphs = 0;
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    if (entry.path().extension() != ".txt") continue;
    ++graphs;
    fs::path side = entry.path();
    side.replace_extension(".json");
    std::ifstream g(entry.path()), s(side);
    GadgetGraph back = read_gadget(g, s);
    EXPECT_EQ(back.m(), 8);
    EXPECT_TRUE(verify_gadget(back).ok());
  }
  EXPECT_EQ(graphs, 2);
}

TEST(Cli, NaiveStreamingRows) {
  Result r = run({"reduction", "--m", "4", "--r", "1", "--trials", "2", "--streaming", "naive",
                  "--p", "auto"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& row : json_of(r)["rows"]) {
    EXPECT_EQ(row["phases"].get<int>(), 2 * row["passes"].get<int>() - 1);
    EXPECT_EQ(row["streaming_bit"], row["bit_true"]);
  }
}

TEST(Cli, MisalignedSummary) {
  Result r = run({"hpc", "--m", "16", "--r", "4", "--misaligned", "--trials", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto s = json_of(r)["summary"];
  EXPECT_EQ(s["N"], 16);
  EXPECT_GE(s["success_rate"].get<double>(), 0.9);
  EXPECT_TRUE(s["within_bound"].get<bool>());
}

TEST(Cli, InfoFuzz) {
  Result r = run({"info", "--fuzz-lambda", "2000"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& row : json_of(r)["rows"]) EXPECT_EQ(row["violations"], 0);
}

TEST(Cli, SiSolverWritesFile) {
  TempDir dir;
  const fs::path out = dir.path() / "si.json";
  Result r = run({"sisolver", "--m", "64", "--trials", "4", "--calibration-factor", "2",
                  "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["summary"]["trials"], 4);
  EXPECT_EQ(j["rows"].size(), 4u);
}

}  // namespace
}  // namespace degenlab::cli
