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

#include <map>

#include <gtest/gtest.h>

#include "degenlab/si_solver.h"
#include "oracles.h"

namespace degenlab {
namespace {

TEST(Score, Formula) {
  EXPECT_DOUBLE_EQ(score(0.25, 4), 0.0);
  EXPECT_DOUBLE_EQ(score(0.1, 4), 0.0);
  EXPECT_NEAR(score(0.5, 4), 1.0 / 3, 1e-15);
  double prev = 0;
  for (int n : {4, 16, 64, 256}) {
    double s = score(1.0, n);
    EXPECT_GT(s, prev);
    EXPECT_LT(s, 1.0);
    prev = s;
  }
  EXPECT_THROW(score(1.5, 4), std::invalid_argument);
  EXPECT_THROW(score(0.5, 0), std::invalid_argument);
}

TEST(Parameters, RoundsAndCutoff) {
  EXPECT_EQ(rounds_for(1.0, 0.5), 6400);
  EXPECT_EQ(rounds_for(0.3, 0.5), 21334);
  EXPECT_EQ(overflow_cutoff(64, 0.5), 2);
  EXPECT_EQ(overflow_cutoff(16, 0.5), 1);
}

TEST(Scramble, InducesUniformSupport) {
  for (int m : {4, 8}) {
    Rng rng(static_cast<std::uint64_t>(m));
    SetIntInstance si = sample_setint(m, rng);
    std::map<std::pair<ElementSet, ElementSet>, double> mass;
    double identity = 0;
    for_each_outcome([&](Coins& c) { return scrambled_instance(si, c); },
                     [&](double w, const Scrambled& s) {
                       mass[{s.x, s.y}] += w;
                       bool id = true;
                       for (int e = 0; e < m; ++e) id &= s.gamma[e] == e;
                       if (id) identity += w;
                       EXPECT_EQ(intersect(s.x, s.y).size(), 1u);
                     });
    auto support = oracle::setint_support(m);
    ASSERT_EQ(mass.size(), support.size());
    for (auto& [k, w] : mass) EXPECT_NEAR(w, 1.0 / support.size(), 1e-12);
    double fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    EXPECT_NEAR(identity, 1.0 / fact, 1e-15);
  }
}

TEST(RevealSolver, AnalyticLambda) {
  EXPECT_NEAR(*make_reveal_solver(1.0)->analytic_lambda(16), 9.0 / 20, 1e-15);
  EXPECT_NEAR(*make_reveal_solver(0.5)->analytic_lambda(64),
              0.5 * (15.0 / 16) * (15.0 / 16) / (17.0 / 16), 1e-12);
  EXPECT_NEAR(*make_reveal_solver(0.0)->analytic_lambda(64), 0.0, 1e-15);
  EXPECT_NEAR(make_silent_solver()->analytic_lambda(64).value_or(0.0), 0.0, 1e-15);
}

TEST(RevealSolver, MeasuredLambdaMatchesAnalytic) {
  for (double p : {0.0, 0.5, 1.0}) {
    auto solver = make_reveal_solver(p);
    double measured = measure_eps_solving(as_protocol(*solver), 8, EpsMode::kInternalA);
    EXPECT_NEAR(measured, p * oracle::lambda_point_vs_uniform(2), 1e-9);
    EXPECT_NEAR(measured, *solver->analytic_lambda(8), 1e-9);
  }
}

TEST(RevealSolver, PosteriorsAreSupportedOnX) {
  Rng rng(3);
  RngCoins coins(rng);
  auto solver = make_reveal_solver(0.5);
  for (int t = 0; t < 100; ++t) {
    SetIntInstance si = sample_setint(16, rng);
    std::string tr = solver->run(si.x, si.y, coins);
    DiscreteDistribution q = solver->posterior(tr, si.x, 16);
    double in_x = 0;
    for (int e : si.x) in_x += q[e];
    EXPECT_NEAR(in_x, 1.0, 1e-12);
    if (!tr.empty()) {
      EXPECT_NEAR(q[intersection_element(si)], 1.0, 1e-12);
    }
  }
}

TEST(Exact, FullRevealSucceeds) {
  auto solver = make_reveal_solver(1.0);
  SolverConfig config{*solver->analytic_lambda(64), 0.5, 10};
  ExperimentSummary s = run_si_experiment(*solver, 64, config, 40, 5);
  EXPECT_GE(s.success_rate(), 0.95);
  EXPECT_EQ(s.k_rounds, rounds_for(config.eps, 0.5));
}

TEST(Exact, SilentFails) {
  auto solver = make_silent_solver();
  SolverConfig config{0.5, 0.5, 2};
  ExperimentSummary s = run_si_experiment(*solver, 16, config, 5, 6);
  EXPECT_EQ(s.successes, 0);
  EXPECT_EQ(s.overflow, 5);
}

TEST(Exact, ReportsScoresAndFailureKind) {
  auto solver = make_reveal_solver(0.5);
  SolverConfig config{*solver->analytic_lambda(32), 0.5, 4};
  Rng rng(7);
  Calibration cal = calibrate(*solver, 32, config, rng);
  EXPECT_GT(cal.mean_target, cal.mean_other);
  EXPECT_NEAR(cal.tau, cal.k_rounds * (cal.mean_target + cal.mean_other) / 2, 1e-6);
  SetIntInstance si = sample_setint(32, rng);
  ExactResult r = exact_from_eps(si, *solver, config, cal, rng);
  EXPECT_EQ(r.total_score.size(), si.x.size());
  for (double v : r.total_score) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, static_cast<double>(cal.k_rounds));
  }
  if (r.failure == FailureKind::kNone) {
    ASSERT_TRUE(r.element.has_value());
    EXPECT_EQ(*r.element, intersection_element(si));
  }
  EXPECT_EQ(failure_name(FailureKind::kOverflow), "overflow");
}

TEST(Exact, RejectsBadConfig) {
  auto solver = make_reveal_solver(0.5);
  Rng rng(8);
  SetIntInstance si = sample_setint(16, rng);
  Calibration cal;
  EXPECT_THROW(exact_from_eps(si, *solver, {0.1, 0.5, 1}, cal, rng), std::invalid_argument);
  EXPECT_THROW(exact_from_eps(si, *solver, {0.5, 1.5, 1}, cal, rng), std::invalid_argument);
}

TEST(Experiment, SeedDeterminesSummary) {
  auto solver = make_reveal_solver(0.5);
  SolverConfig config{*solver->analytic_lambda(64), 0.5, 2};
  auto a = run_si_experiment(*solver, 64, config, 4, 11).to_json();
  auto b = run_si_experiment(*solver, 64, config, 4, 11).to_json();
  EXPECT_EQ(a, b);
  for (const char* key : {"m", "gamma", "eps", "k_rounds", "tau", "trials", "success",
                          "failure_kind", "others_over_cutoff"}) {
    EXPECT_TRUE(a.contains(key)) << key;
  }
}

}  // namespace
}  // namespace degenlab
