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

#include "degenlab/si_solver.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degenlab {
namespace {

class RevealSolver final : public EpsSolver {
 public:
  explicit RevealSolver(double p) : p_(p) {}

  std::string run(const ElementSet& x, const ElementSet& y, Coins& coins) const override {
    if (!coins.bernoulli(p_)) return {};
    return std::to_string(intersect(x, y).at(0));
  }
  DiscreteDistribution posterior(const std::string& transcript, const ElementSet& x,
                                 int m) const override {
    if (transcript.empty()) return DiscreteDistribution::uniform_over(m, x);
    return DiscreteDistribution::point_mass(m, std::stoi(transcript));
  }
  std::optional<double> analytic_lambda(int m) const override {
    const double inv = 1.0 / (m / 4);
    return p_ * (1 - inv) * (1 - inv) / (1 + inv);
  }

 private:
  double p_;
};

class SilentSolver final : public EpsSolver {
 public:
  std::string run(const ElementSet&, const ElementSet&, Coins&) const override { return {}; }
  DiscreteDistribution posterior(const std::string&, const ElementSet& x, int m) const override {
    return DiscreteDistribution::uniform_over(m, x);
  }
  std::optional<double> analytic_lambda(int) const override { return 0.0; }
};

ElementSet image(const std::vector<int>& gamma, const ElementSet& s) {
  ElementSet out;
  out.reserve(s.size());
  for (int e : s) out.push_back(gamma[e]);
  std::sort(out.begin(), out.end());
  return out;
}

// Scores of every element of X (in X order) for one scrambled run.
std::vector<double> round_scores(const SetIntInstance& si, const EpsSolver& solver,
                                 Coins& coins) {
  const Scrambled sc = scrambled_instance(si, coins);
  const std::string t = solver.run(sc.x, sc.y, coins);
  const DiscreteDistribution q = solver.posterior(t, sc.x, si.m);
  const int n = si.m / 4;
  std::vector<double> out;
  out.reserve(si.x.size());
  for (int e : si.x) out.push_back(score(q[sc.gamma[e]], n));
  return out;
}

void check_setint(const SetIntInstance& si) {
  if (si.m < 4 || si.m % 4 != 0) throw std::invalid_argument("m must be a positive multiple of 4");
  const std::size_t n = si.m / 4;
  if (si.x.size() != n || si.y.size() != n) throw std::invalid_argument("|X| and |Y| must be m/4");
  intersection_element(si);
}

void check_config(const SolverConfig& c, int m) {
  if (!(c.gamma > 0 && c.gamma < 1)) throw std::invalid_argument("gamma must be in (0, 1)");
  if (!(c.eps >= 8.0 / m) || c.eps > 1) throw std::invalid_argument("eps must be in [8/m, 1]");
  if (c.calibration_factor < 1) throw std::invalid_argument("calibration factor must be positive");
}

}  // namespace

std::unique_ptr<EpsSolver> make_reveal_solver(double p) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("reveal probability must be in [0, 1]");
  return std::make_unique<RevealSolver>(p);
}

std::unique_ptr<EpsSolver> make_silent_solver() { return std::make_unique<SilentSolver>(); }

SetIntProtocol as_protocol(const EpsSolver& solver) {
  return [&solver](const ElementSet& x, const ElementSet& y, Coins& coins) {
    return solver.run(x, y, coins);
  };
}

double score(double q, int n) {
  if (!(q >= 0 && q <= 1) || n < 1) throw std::invalid_argument("score needs q in [0, 1], n >= 1");
  const double base = 1.0 / n;
  return q <= base ? 0.0 : (q - base) / (q + base);
}

Scrambled scrambled_instance(const SetIntInstance& si, Coins& coins) {
  Scrambled out;
  out.gamma = random_permutation(coins, si.m);
  out.x = image(out.gamma, si.x);
  out.y = image(out.gamma, si.y);
  return out;
}

std::int64_t rounds_for(double eps, double gamma) {
  return static_cast<std::int64_t>(std::ceil(1600.0 / (eps * gamma * gamma)));
}

int overflow_cutoff(int m, double gamma) {
  return static_cast<int>(std::floor(gamma * gamma * m / 10)) + 1;
}

Calibration calibrate(const EpsSolver& solver, int m, const SolverConfig& config, Rng& rng) {
  check_config(config, m);
  Calibration c;
  c.k_rounds = rounds_for(config.eps, config.gamma);
  const std::int64_t rounds = c.k_rounds * config.calibration_factor;
  RngCoins coins(rng);
  double target = 0;
  double other = 0;
  for (std::int64_t i = 0; i < rounds; ++i) {
    const SetIntInstance si = sample_setint(m, coins);
    const int e_star = intersection_element(si);
    const auto scores = round_scores(si, solver, coins);
    double rest = 0;
    for (std::size_t j = 0; j < si.x.size(); ++j) {
      if (si.x[j] == e_star) {
        target += scores[j];
      } else {
        rest += scores[j];
      }
    }
    if (si.x.size() > 1) other += rest / static_cast<double>(si.x.size() - 1);
  }
  c.mean_target = target / static_cast<double>(rounds);
  c.mean_other = other / static_cast<double>(rounds);
  c.tau = static_cast<double>(c.k_rounds) * (c.mean_target + c.mean_other) / 2;
  return c;
}

std::string failure_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::kNone:
      return "none";
    case FailureKind::kOverflow:
      return "overflow";
    case FailureKind::kEmptyIntersection:
      return "empty_intersection";
  }
  return "unknown";
}

ExactResult exact_from_eps(const SetIntInstance& si, const EpsSolver& solver,
                           const SolverConfig& config, const Calibration& calibration,
                           Rng& rng) {
  check_setint(si);
  check_config(config, si.m);
  const int e_star = intersection_element(si);
  RngCoins coins(rng);
  ExactResult res;
  res.total_score.assign(si.x.size(), 0.0);
  for (std::int64_t i = 0; i < calibration.k_rounds; ++i) {
    const auto scores = round_scores(si, solver, coins);
    for (std::size_t j = 0; j < scores.size(); ++j) res.total_score[j] += scores[j];
  }
  ElementSet s;
  for (std::size_t j = 0; j < si.x.size(); ++j) {
    if (si.x[j] == e_star) res.target_score = res.total_score[j];
    if (res.total_score[j] >= calibration.tau) s.push_back(si.x[j]);
  }
  res.s_size = static_cast<int>(s.size());
  res.target_below_tau = !std::binary_search(s.begin(), s.end(), e_star);
  res.s_others = res.s_size - (res.target_below_tau ? 0 : 1);
  if (res.s_size > overflow_cutoff(si.m, config.gamma)) {
    res.failure = FailureKind::kOverflow;
    return res;
  }
  const ElementSet common = intersect(s, si.y);  // Bob's side
  if (common.empty()) {
    res.failure = FailureKind::kEmptyIntersection;
    return res;
  }
  res.element = common.front();
  return res;
}

ScoreStats score_statistics(const EpsSolver& solver, int m, std::int64_t rounds, Rng& rng) {
  if (rounds < 2) throw std::invalid_argument("need at least two rounds");
  RngCoins coins(rng);
  std::vector<double> t(rounds), o(rounds);
  for (std::int64_t i = 0; i < rounds; ++i) {
    const SetIntInstance si = sample_setint(m, coins);
    const int e_star = intersection_element(si);
    const auto scores = round_scores(si, solver, coins);
    std::vector<double> rest;
    for (std::size_t j = 0; j < si.x.size(); ++j) {
      if (si.x[j] == e_star) {
        t[i] = scores[j];
      } else {
        rest.push_back(scores[j]);
      }
    }
    o[i] = rest.empty() ? 0.0 : rest[coins.below(rest.size())];
  }
  const double nr = static_cast<double>(rounds);
  auto moments = [&](const std::vector<double>& v, double& mean, double& var, double& se_var) {
    mean = 0;
    for (double x : v) mean += x;
    mean /= nr;
    double m2 = 0, m4 = 0;
    for (double x : v) {
      const double d = x - mean;
      m2 += d * d;
      m4 += d * d * d * d;
    }
    var = m2 / (nr - 1);
    m4 /= nr;
    se_var = std::sqrt(std::max(0.0, m4 - var * var) / nr);
  };
  ScoreStats st;
  st.rounds = rounds;
  moments(t, st.mean_target, st.var_target, st.se_var_target);
  moments(o, st.mean_other, st.var_other, st.se_var_other);
  double gap_var = 0;
  const double gap_mean = st.mean_target - st.mean_other;
  for (std::int64_t i = 0; i < rounds; ++i) {
    const double d = t[i] - o[i] - gap_mean;
    gap_var += d * d;
  }
  st.se_gap = std::sqrt(gap_var / (nr - 1) / nr);
  return st;
}

nlohmann::json ExperimentSummary::to_json() const {
  return {{"m", m},
          {"gamma", gamma},
          {"eps", eps},
          {"k_rounds", k_rounds},
          {"tau", tau},
          {"trials", trials},
          {"success", success_rate()},
          {"failure_kind",
           {{"overflow", overflow},
            {"empty_intersection", empty_intersection},
            {"below_tau", below_tau}}},
          {"others_over_cutoff", others_over_cutoff}};
}

ExperimentSummary run_si_experiment(const EpsSolver& solver, int m, const SolverConfig& config,
                                    int trials, std::uint64_t seed) {
  Rng calib_rng(derive_seed(seed, 0));
  const Calibration cal = calibrate(solver, m, config, calib_rng);
  ExperimentSummary sum;
  sum.m = m;
  sum.gamma = config.gamma;
  sum.eps = config.eps;
  sum.k_rounds = cal.k_rounds;
  sum.tau = cal.tau;
  sum.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t) + 1));
    const SetIntInstance si = sample_setint(m, rng);
    const ExactResult res = exact_from_eps(si, solver, config, cal, rng);
    sum.successes += res.element.has_value() && *res.element == intersection_element(si);
    sum.overflow += res.failure == FailureKind::kOverflow;
    sum.empty_intersection += res.failure == FailureKind::kEmptyIntersection;
    sum.below_tau += res.target_below_tau;
    sum.others_over_cutoff += res.s_others > static_cast<int>(config.gamma * config.gamma * m / 10);
  }
  return sum;
}

}  // namespace degenlab
