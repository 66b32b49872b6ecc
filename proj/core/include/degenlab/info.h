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

// Discrete information measures: positive triangular discrimination, total
// variation distance, entropy and (conditional) mutual information in bits,
// and a sampling distinguisher for Bernoulli rates.

#ifndef DEGENLAB_INFO_H_
#define DEGENLAB_INFO_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "degenlab/coins.h"

namespace degenlab {

class DiscreteDistribution {
 public:
  // Throws std::invalid_argument on negative entries or a sum off 1 by more
  // than 1e-12 (scaled by the support size).
  explicit DiscreteDistribution(std::vector<double> probs);

  static DiscreteDistribution uniform(int n);
  static DiscreteDistribution point_mass(int n, int at);
  // Uniform over `support` (distinct values in [0, n)).
  static DiscreteDistribution uniform_over(int n, std::span<const int> support);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[i]; }
  const std::vector<double>& probs() const { return p_; }
  // Mixture t * this + (1 - t) * other.
  DiscreteDistribution mix(const DiscreteDistribution& other, double t) const;

 private:
  std::vector<double> p_;
};

// sum over {x : mu(x) > nu(x)} of (mu(x) - nu(x))^2 / (mu(x) + nu(x)).
double triangular_discrimination(const DiscreteDistribution& mu,
                                 const DiscreteDistribution& nu);
// Half the l1 distance.
double tvd(const DiscreteDistribution& mu, const DiscreteDistribution& nu);
double l1_distance(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

double entropy(const DiscreteDistribution& mu);
double binary_entropy(double p);

// N-dimensional joint probability table, row-major.
class JointTable {
 public:
  JointTable(std::vector<int> dims, std::vector<double> probs);

  int rank() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<double>& probs() const { return p_; }
  double at(std::span<const int> index) const;

  // Marginal on `axes`, in the given order.
  JointTable marginal(std::span<const int> axes) const;

 private:
  std::vector<int> dims_;
  std::vector<double> p_;
};

// H of the marginal on `axes`.
double entropy(const JointTable& t, std::span<const int> axes);
// I(axes_a ; axes_b | axes_c).
double mutual_information(const JointTable& t, std::span<const int> a, std::span<const int> b,
                          std::span<const int> c = {});
// Axis 0 against axis 1 of a rank-2 table.
double mutual_information(const JointTable& t);
// I(0 ; 1 | 2) of a rank-3 table.
double conditional_mutual_information(const JointTable& t);

enum class RateVerdict { kLow, kHigh };

// ceil(48 / (alpha * beta^2) * ln(1 / gamma)).
std::int64_t distinguisher_samples(double alpha, double beta, double gamma);

// Draws distinguisher_samples() samples and answers kLow iff their sum is
// below alpha * (1 + beta / 4) * k. Errs with probability at most gamma when
// the rate is at most alpha or at least (1 + beta) * alpha.
RateVerdict bernoulli_distinguisher(const std::function<bool()>& sampler, double alpha,
                                    double beta, double gamma);

// A random distribution on `n` points: normalized exponentials, with each
// point zeroed with probability `sparsity` (at least one point survives).
DiscreteDistribution random_distribution(int n, Rng& rng, double sparsity = 0.2);

struct PropertyResult {
  std::string name;
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  double worst_slack = 0;  // most negative (rhs - lhs) seen; >= -tol when clean
};

// Randomized checks of the Lambda inequalities and entropy facts:
//   lambda_tvd     ||mu - nu||^2 / 8 <= Lambda <= ||mu - nu|| / 2 <= 1  (tol 1e-12)
//   lambda_loss    E_mu[f] <= Lambda * max f + 6 E_nu[f]                (tol 1e-9)
//   convexity      Lambda of mixtures <= mixture of Lambdas             (tol 1e-9)
//   trick1         |eta| <= sqrt(a (b + eta)) implies eta <= a + 2b      (tol 1e-9)
//   entropy_bound  H2(p) <= 2 sqrt(p (1 - p)) on a 1001-point grid       (tol 1e-12)
//   chain_rule     I(AB;C) = I(A;C) + I(B;C|A) on random 3-way tables   (tol 1e-9)
// `trials` applies to the first four; the chain rule runs trials / 100 + 1.
std::vector<PropertyResult> fuzz_lambda_properties(std::int64_t trials, std::uint64_t seed);

}  // namespace degenlab

#endif  // DEGENLAB_INFO_H_
