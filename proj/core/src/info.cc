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

#include "degenlab/info.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace degenlab {
namespace {

void check_normalized(const std::vector<double>& p) {
  double sum = 0;
  for (double x : p) {
    if (!(x >= 0)) throw std::invalid_argument("negative or NaN probability");
    sum += x;
  }
  const double tol = 1e-12 * std::max<double>(1, static_cast<double>(p.size()));
  if (std::abs(sum - 1) > tol) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum));
  }
}

void check_same_support(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("distributions differ in support size");
}

double plogp_sum(const std::vector<double>& p) {
  double h = 0;
  for (double x : p) {
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw std::invalid_argument("empty distribution");
  check_normalized(p_);
}

DiscreteDistribution DiscreteDistribution::uniform(int n) {
  if (n < 1) throw std::invalid_argument("uniform distribution needs n >= 1");
  return DiscreteDistribution(std::vector<double>(n, 1.0 / n));
}

DiscreteDistribution DiscreteDistribution::point_mass(int n, int at) {
  if (at < 0 || at >= n) throw std::invalid_argument("point mass outside the support");
  std::vector<double> p(n, 0.0);
  p[at] = 1;
  return DiscreteDistribution(std::move(p));
}

DiscreteDistribution DiscreteDistribution::uniform_over(int n, std::span<const int> support) {
  if (support.empty()) throw std::invalid_argument("empty support");
  std::vector<double> p(n, 0.0);
  for (int x : support) {
    if (x < 0 || x >= n || p[x] != 0) throw std::invalid_argument("bad support element");
    p[x] = 1.0 / static_cast<double>(support.size());
  }
  return DiscreteDistribution(std::move(p));
}

DiscreteDistribution DiscreteDistribution::mix(const DiscreteDistribution& other, double t) const {
  check_same_support(*this, other);
  std::vector<double> p(p_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = t * p_[i] + (1 - t) * other.p_[i];
  return DiscreteDistribution(std::move(p));
}

double triangular_discrimination(const DiscreteDistribution& mu,
                                 const DiscreteDistribution& nu) {
  check_same_support(mu, nu);
  double sum = 0;
  for (int x = 0; x < mu.size(); ++x) {
    const double diff = mu[x] - nu[x];
    if (diff > 0) sum += diff * diff / (mu[x] + nu[x]);
  }
  return sum;
}

double l1_distance(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  check_same_support(mu, nu);
  double sum = 0;
  for (int x = 0; x < mu.size(); ++x) sum += std::abs(mu[x] - nu[x]);
  return sum;
}

double tvd(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  return l1_distance(mu, nu) / 2;
}

double entropy(const DiscreteDistribution& mu) { return plogp_sum(mu.probs()); }

double binary_entropy(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("binary entropy needs p in [0, 1]");
  return plogp_sum({p, 1 - p});
}

JointTable::JointTable(std::vector<int> dims, std::vector<double> probs)
    : dims_(std::move(dims)), p_(std::move(probs)) {
  std::size_t cells = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("table dimension must be positive");
    cells *= static_cast<std::size_t>(d);
  }
  if (cells != p_.size()) throw std::invalid_argument("table size does not match its dims");
  check_normalized(p_);
}

double JointTable::at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != rank()) throw std::invalid_argument("index rank mismatch");
  std::size_t flat = 0;
  for (int k = 0; k < rank(); ++k) {
    if (index[k] < 0 || index[k] >= dims_[k]) throw std::out_of_range("table index");
    flat = flat * dims_[k] + index[k];
  }
  return p_[flat];
}

JointTable JointTable::marginal(std::span<const int> axes) const {
  std::vector<int> out_dims;
  for (int a : axes) {
    if (a < 0 || a >= rank()) throw std::invalid_argument("axis out of range");
    out_dims.push_back(dims_[a]);
  }
  const std::size_t out_cells =
      std::accumulate(out_dims.begin(), out_dims.end(), std::size_t{1}, std::multiplies<>());
  std::vector<double> out(out_cells, 0.0);
  std::vector<int> index(rank(), 0);
  for (double p : p_) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < axes.size(); ++k) flat = flat * out_dims[k] + index[axes[k]];
    out[flat] += p;
    for (int k = rank() - 1; k >= 0; --k) {
      if (++index[k] < dims_[k]) break;
      index[k] = 0;
    }
  }
  // Summation order can push the total a few ulps off; renormalize.
  const double total = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& x : out) x /= total;
  return JointTable(std::move(out_dims), std::move(out));
}

double entropy(const JointTable& t, std::span<const int> axes) {
  if (axes.empty()) return 0;
  return plogp_sum(t.marginal(axes).probs());
}

double mutual_information(const JointTable& t, std::span<const int> a, std::span<const int> b,
                          std::span<const int> c) {
  auto join = [](std::span<const int> x, std::span<const int> y) {
    std::vector<int> out(x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return out;
  };
  const auto ac = join(a, c);
  const auto bc = join(b, c);
  const auto abc = join(ac, b);
  return entropy(t, ac) + entropy(t, bc) - entropy(t, abc) - entropy(t, c);
}

double mutual_information(const JointTable& t) {
  if (t.rank() != 2) throw std::invalid_argument("expected a rank-2 table");
  const int a[] = {0};
  const int b[] = {1};
  return mutual_information(t, a, b);
}

double conditional_mutual_information(const JointTable& t) {
  if (t.rank() != 3) throw std::invalid_argument("expected a rank-3 table");
  const int a[] = {0};
  const int b[] = {1};
  const int c[] = {2};
  return mutual_information(t, a, b, c);
}

std::int64_t distinguisher_samples(double alpha, double beta, double gamma) {
  if (!(alpha > 0 && alpha <= 1) || !(beta > 0 && beta <= 1) || !(gamma > 0 && gamma < 1)) {
    throw std::invalid_argument("distinguisher needs alpha, beta in (0, 1] and gamma in (0, 1)");
  }
  return static_cast<std::int64_t>(std::ceil(48.0 / (alpha * beta * beta) * std::log(1 / gamma)));
}

RateVerdict bernoulli_distinguisher(const std::function<bool()>& sampler, double alpha,
                                    double beta, double gamma) {
  const std::int64_t k = distinguisher_samples(alpha, beta, gamma);
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < k; ++i) sum += sampler();
  const double tau = alpha * (1 + beta / 4) * static_cast<double>(k);
  return static_cast<double>(sum) < tau ? RateVerdict::kLow : RateVerdict::kHigh;
}

DiscreteDistribution random_distribution(int n, Rng& rng, double sparsity) {
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution drop(sparsity);
  std::vector<double> w(n);
  double total = 0;
  for (double& x : w) {
    x = drop(rng) ? 0.0 : expo(rng);
    total += x;
  }
  if (total == 0) {
    w[std::uniform_int_distribution<int>(0, n - 1)(rng)] = 1;
    total = 1;
  }
  for (double& x : w) x /= total;
  return DiscreteDistribution(std::move(w));
}

std::vector<PropertyResult> fuzz_lambda_properties(std::int64_t trials, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x1a));
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  PropertyResult tvd_p{"lambda_tvd"}, loss{"lambda_loss"}, convex{"convexity"},
      trick{"trick1"}, ent{"entropy_bound"}, chain{"chain_rule"};
  auto check = [](PropertyResult& r, double slack, double tol) {
    ++r.trials;
    r.worst_slack = std::min(r.worst_slack, slack);
    if (slack < -tol) ++r.violations;
  };

  for (std::int64_t t = 0; t < trials; ++t) {
    const int n = size(rng);
    const auto mu = random_distribution(n, rng);
    const auto nu = random_distribution(n, rng);
    const double lam = triangular_discrimination(mu, nu);
    const double l1 = l1_distance(mu, nu);
    check(tvd_p, std::min({lam - l1 * l1 / 8, l1 / 2 - lam, 1 - l1 / 2}), 1e-12);

    double e_mu = 0, e_nu = 0, f_max = 0;
    for (int x = 0; x < n; ++x) {
      const double f = unit(rng);
      e_mu += mu[x] * f;
      e_nu += nu[x] * f;
      f_max = std::max(f_max, f);
    }
    check(loss, lam * f_max + 6 * e_nu - e_mu, 1e-9);

    const auto mu2 = random_distribution(n, rng);
    const auto nu2 = random_distribution(n, rng);
    const double w = unit(rng);
    const double mixed = triangular_discrimination(mu.mix(mu2, w), nu.mix(nu2, w));
    check(convex, w * lam + (1 - w) * triangular_discrimination(mu2, nu2) - mixed, 1e-9);

    // Rejection-sample a triple meeting the hypothesis.
    for (;;) {
      const double a = unit(rng) * 2, b = unit(rng) * 2;
      const double eta = (unit(rng) * 2 - 1) * 4;
      if (b + eta < 0 || std::abs(eta) > std::sqrt(a * (b + eta))) continue;
      check(trick, a + 2 * b - eta, 1e-9);
      break;
    }
  }

  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    check(ent, 2 * std::sqrt(p * (1 - p)) - binary_entropy(p), 1e-12);
  }

  const std::int64_t tables = trials / 100 + 1;
  for (std::int64_t t = 0; t < tables; ++t) {
    std::vector<int> dims = {size(rng) / 2 + 1, size(rng) / 2 + 1, size(rng) / 2 + 1};
    const auto joint = random_distribution(dims[0] * dims[1] * dims[2], rng, 0.1);
    const JointTable table(dims, joint.probs());
    const int a[] = {0}, b[] = {1}, c[] = {2}, ab[] = {0, 1};
    const double lhs = mutual_information(table, ab, c);
    const double rhs = mutual_information(table, a, c) + mutual_information(table, b, c, a);
    check(chain, -std::abs(lhs - rhs), 1e-9);
  }
  return {tvd_p, loss, convex, trick, ent, chain};
}

}  // namespace degenlab
