// Copyright 2026 The Commitment Incentives Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commitment/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace commitment {

void PopulationConfig::validate() const {
  if (pop_size < 2) throw InvalidParameter("pop_size must be at least 2");
  if (!std::isfinite(beta) || beta < 0.0) {
    throw InvalidParameter("beta must be finite and non-negative");
  }
}

PairGame restrict_to_pair(const PayoffMatrix& m, Strategy i, Strategy j) {
  return {.ii = m(i, i), .ij = m(i, j), .ji = m(j, i), .jj = m(j, j)};
}

PairPayoffs pairwise_payoffs(const PairGame& game, int x, int n) {
  if (n < 2) throw RangeError("population size must be at least 2");
  if (x < 0 || x > n) {
    throw RangeError("count " + std::to_string(x) + " outside [0, " + std::to_string(n) + "]");
  }
  const double others = static_cast<double>(n - 1);
  const double xi = static_cast<double>(x);
  const double xj = static_cast<double>(n - x);
  return {.pi_i = ((xi - 1.0) * game.ii + xj * game.ij) / others,
          .pi_j = (xi * game.ji + (xj - 1.0) * game.jj) / others};
}

PairPayoffs pairwise_payoffs(const PayoffMatrix& m, Strategy i, Strategy j, int x, int n) {
  return pairwise_payoffs(restrict_to_pair(m, i, j), x, n);
}

double fermi_prob(double f_a, double f_b, double beta) {
  const double z = beta * (f_b - f_a);
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

TransitionRates transition_rates(const PairGame& game, int k, const PopulationConfig& cfg) {
  cfg.validate();
  const int n = cfg.pop_size;
  if (k < 0 || k > n) {
    throw RangeError("k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
  if (k == 0 || k == n) return {0.0, 0.0};
  const auto [pi_a, pi_b] = pairwise_payoffs(game, k, n);
  const double nn = static_cast<double>(n);
  const double mixing = (nn - k) / nn * (k / nn);
  return {.t_plus = mixing * fermi_prob(pi_b, pi_a, cfg.beta),
          .t_minus = mixing * fermi_prob(pi_a, pi_b, cfg.beta)};
}

TransitionRates transition_rates(const PayoffMatrix& m, Strategy i, Strategy j, int k,
                                 const PopulationConfig& cfg) {
  return transition_rates(restrict_to_pair(m, i, j), k, cfg);
}

double fixation_probability(const PairGame& game, const PopulationConfig& cfg) {
  cfg.validate();
  const int n = cfg.pop_size;
  // log of prod_{j<=i} T-(j)/T+(j) = -beta * sum_{j<=i} (Pi_mutant(j) - Pi_resident(j))
  std::vector<double> log_terms(static_cast<std::size_t>(n), 0.0);
  double cumulative = 0.0;
  for (int j = 1; j < n; ++j) {
    const auto [pi_mutant, pi_resident] = pairwise_payoffs(game, j, n);
    cumulative -= cfg.beta * (pi_mutant - pi_resident);
    log_terms[static_cast<std::size_t>(j)] = cumulative;
  }
  const double shift = *std::max_element(log_terms.begin(), log_terms.end());
  double scaled_sum = 0.0;
  for (double t : log_terms) scaled_sum += std::exp(t - shift);
  // rho = 1 / sum_i exp(t_i) = exp(-shift) / sum_i exp(t_i - shift)
  return std::exp(-shift) / scaled_sum;
}

double fixation_probability(const PayoffMatrix& m, Strategy resident, Strategy mutant,
                            const PopulationConfig& cfg) {
  return fixation_probability(restrict_to_pair(m, mutant, resident), cfg);
}

TransitionMatrix transition_matrix_from_fixation(const Eigen::MatrixXd& fixation) {
  const Eigen::Index q = fixation.rows();
  if (q < 2 || fixation.cols() != q) {
    throw InvalidParameter("fixation table must be square with at least two states");
  }
  TransitionMatrix tm{Eigen::MatrixXd::Zero(q, q)};
  const double scale = 1.0 / static_cast<double>(q - 1);
  for (Eigen::Index i = 0; i < q; ++i) {
    double off_diagonal = 0.0;
    for (Eigen::Index j = 0; j < q; ++j) {
      if (i == j) continue;
      const double rho = fixation(i, j);
      if (!(rho >= 0.0 && rho <= 1.0)) {
        throw InvalidParameter("fixation probabilities must lie in [0, 1]");
      }
      tm.rates(i, j) = rho * scale;
      off_diagonal += tm.rates(i, j);
    }
    tm.rates(i, i) = 1.0 - off_diagonal;
  }
  return tm;
}

TransitionMatrix build_transition_matrix(const PayoffMatrix& m, const PopulationConfig& cfg) {
  cfg.validate();
  constexpr auto q = static_cast<Eigen::Index>(kNumStrategies);
  Eigen::MatrixXd fixation = Eigen::MatrixXd::Zero(q, q);
  for (Strategy resident : kAllStrategies) {
    for (Strategy mutant : kAllStrategies) {
      if (resident == mutant) continue;
      fixation(static_cast<Eigen::Index>(index(resident)),
               static_cast<Eigen::Index>(index(mutant))) =
          fixation_probability(m, resident, mutant, cfg);
    }
  }
  return transition_matrix_from_fixation(fixation);
}

namespace {

// Every state reaches, and is reached from, state 0 through positive rates.
bool is_irreducible(const Eigen::MatrixXd& rates) {
  const Eigen::Index q = rates.rows();
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    std::vector<Eigen::Index> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const Eigen::Index s = stack.back();
      stack.pop_back();
      for (Eigen::Index t = 0; t < q; ++t) {
        const double w = forward ? rates(s, t) : rates(t, s);
        if (t != s && w > 0.0 && !seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          stack.push_back(t);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(true) && reaches_all(false);
}

constexpr double kNegativeSlack = 1e-12;

}  // namespace

StationaryResult stationary_distribution(const TransitionMatrix& tm) {
  const Eigen::MatrixXd& rates = tm.rates;
  const Eigen::Index q = rates.rows();
  if (q < 1 || rates.cols() != q) throw InvalidParameter("transition matrix must be square");
  if (!is_irreducible(rates)) {
    throw DegenerateChain("transition matrix is reducible; stationary distribution is not unique");
  }

  // Grassmann-Taksar-Heyman elimination of pi (M - I) = 0. It works on
  // off-diagonal rates only, so no 1 - sum cancellation enters the solve.
  Eigen::MatrixXd work = rates;
  for (Eigen::Index k = q - 1; k > 0; --k) {
    const double exit_rate = work.row(k).head(k).sum();
    if (!(exit_rate > 0.0)) throw DegenerateChain("state is unreachable after elimination");
    work.col(k).head(k) /= exit_rate;
    work.topLeftCorner(k, k).noalias() += work.col(k).head(k) * work.row(k).head(k);
  }
  Eigen::VectorXd pi(q);
  pi(0) = 1.0;
  for (Eigen::Index k = 1; k < q; ++k) {
    pi(k) = pi.head(k).dot(work.col(k).head(k));
    if (pi(k) > 1e100) pi.head(k + 1) /= pi(k);
  }
  pi /= pi.sum();

  for (Eigen::Index i = 0; i < q; ++i) {
    if (pi(i) < -kNegativeSlack) {
      throw DegenerateChain("stationary solve produced a negative component " +
                            std::to_string(pi(i)));
    }
    pi(i) = std::max(pi(i), 0.0);
  }
  pi /= pi.sum();

  const Eigen::VectorXd drift = rates.transpose() * pi - pi;
  return {.frequencies = pi, .residual = drift.cwiseAbs().maxCoeff()};
}

StationaryAnalysis analyze(const PayoffMatrix& m, const PopulationConfig& cfg) {
  TransitionMatrix tm = build_transition_matrix(m, cfg);
  StationaryResult sr = stationary_distribution(tm);
  return {.payoffs = m, .population = cfg, .transitions = std::move(tm),
          .stationary = std::move(sr)};
}

}  // namespace commitment
