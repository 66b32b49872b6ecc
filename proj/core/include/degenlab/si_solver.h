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

// Exact Set-Intersection from a black-box epsilon-solver: scramble the
// universe, score every element of X by how far the solver's posterior lifts
// it above 1/n, and keep the elements whose total score clears a threshold.

#ifndef DEGENLAB_SI_SOLVER_H_
#define DEGENLAB_SI_SOLVER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "degenlab/coins.h"
#include "degenlab/hpc.h"
#include "degenlab/info.h"
#include "degenlab/setint_measure.h"

namespace degenlab {

class EpsSolver {
 public:
  virtual ~EpsSolver() = default;
  virtual std::string run(const ElementSet& x, const ElementSet& y, Coins& coins) const = 0;
  // Alice's posterior of e* over [m]; supported within x.
  virtual DiscreteDistribution posterior(const std::string& transcript, const ElementSet& x,
                                         int m) const = 0;
  // Lambda(point mass, uniform over X) times the reveal rate, when known.
  virtual std::optional<double> analytic_lambda(int /*m*/) const { return std::nullopt; }
};

// With probability p the transcript names e*; otherwise it is empty.
std::unique_ptr<EpsSolver> make_reveal_solver(double p);
std::unique_ptr<EpsSolver> make_silent_solver();
// Adapts a solver to the enumeration API (transcript only).
SetIntProtocol as_protocol(const EpsSolver& solver);

// (q - 1/n) / (q + 1/n) above 1/n, else 0.
double score(double q, int n);

struct Scrambled {
  std::vector<int> gamma;  // gamma[e] is the image of e
  ElementSet x;
  ElementSet y;
};
Scrambled scrambled_instance(const SetIntInstance& si, Coins& coins);

struct SolverConfig {
  double eps = 0;
  double gamma = 0.5;
  int calibration_factor = 10;  // calibration rounds = factor * k
};

// ceil(1600 / (eps * gamma^2)).
std::int64_t rounds_for(double eps, double gamma);
// floor(gamma^2 m / 10) + 1.
int overflow_cutoff(int m, double gamma);

struct Calibration {
  std::int64_t k_rounds = 0;
  double mean_target = 0;  // per-round score of e*
  double mean_other = 0;   // per-round score of e in X, e != e*
  double tau = 0;          // k * (mean_target + mean_other) / 2
};

// Estimates both per-round means on fresh instances of the hard
// distribution, where e* is known to the harness.
Calibration calibrate(const EpsSolver& solver, int m, const SolverConfig& config, Rng& rng);

enum class FailureKind { kNone, kOverflow, kEmptyIntersection };
std::string failure_name(FailureKind kind);

struct ExactResult {
  std::optional<int> element;
  FailureKind failure = FailureKind::kNone;
  int s_size = 0;
  int s_others = 0;  // |S \ {e*}|
  double target_score = 0;
  bool target_below_tau = false;  // visible to the harness only
  std::vector<double> total_score;  // indexed by element of X, in X order
};

// Preconditions: promise instance with |X| = |Y| = m/4, eps >= 8/m,
// 0 < gamma < 1. Throws std::invalid_argument otherwise.
ExactResult exact_from_eps(const SetIntInstance& si, const EpsSolver& solver,
                           const SolverConfig& config, const Calibration& calibration,
                           Rng& rng);

struct ScoreStats {
  std::int64_t rounds = 0;
  double mean_target = 0;
  double mean_other = 0;
  double var_target = 0;
  double var_other = 0;
  // Standard errors of the four estimates above.
  double se_gap = 0;
  double se_var_target = 0;
  double se_var_other = 0;
};

// Per-round scores of e* and of one uniformly chosen e != e* in X, on fresh
// instances.
ScoreStats score_statistics(const EpsSolver& solver, int m, std::int64_t rounds, Rng& rng);

struct ExperimentSummary {
  int m = 0;
  double gamma = 0;
  double eps = 0;
  std::int64_t k_rounds = 0;
  double tau = 0;
  int trials = 0;
  int successes = 0;
  int overflow = 0;
  int empty_intersection = 0;
  int below_tau = 0;
  int others_over_cutoff = 0;  // |S \ {e*}| > gamma^2 m / 10

  double success_rate() const { return trials ? double(successes) / trials : 0; }
  nlohmann::json to_json() const;
};

// Calibrates once, then runs `trials` reductions on fresh instances; trial t
// draws from derive_seed(seed, t + 1).
ExperimentSummary run_si_experiment(const EpsSolver& solver, int m, const SolverConfig& config,
                                    int trials, std::uint64_t seed);

}  // namespace degenlab

#endif  // DEGENLAB_SI_SOLVER_H_
