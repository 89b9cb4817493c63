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

#ifndef COMMITMENT_EVOLUTION_HPP_
#define COMMITMENT_EVOLUTION_HPP_

#include <Eigen/Dense>

#include <stdexcept>

#include "commitment/game.hpp"

namespace commitment {

struct PopulationConfig {
  int pop_size = 100;  // N
  double beta = 0.1;   // selection intensity

  void validate() const;

  friend bool operator==(const PopulationConfig&, const PopulationConfig&) = default;
};

// Raised when a count argument falls outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Raised when the embedded chain does not have a unique stationary distribution.
class DegenerateChain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The four payoffs that matter when only strategies i and j are present.
struct PairGame {
  double ii = 0.0;
  double ij = 0.0;
  double ji = 0.0;
  double jj = 0.0;
};

PairGame restrict_to_pair(const PayoffMatrix& m, Strategy i, Strategy j);

struct PairPayoffs {
  double pi_i;
  double pi_j;
};

// Average payoffs with x players of i and n - x players of j, self excluded.
PairPayoffs pairwise_payoffs(const PairGame& game, int x, int n);
PairPayoffs pairwise_payoffs(const PayoffMatrix& m, Strategy i, Strategy j, int x, int n);

// Probability that a player with fitness f_a imitates one with fitness f_b.
double fermi_prob(double f_a, double f_b, double beta);

struct TransitionRates {
  double t_plus;
  double t_minus;
};

// Rates at which the number k of i-players grows or shrinks by one, in a
// population of i and j. k = 0 and k = N are absorbing and give zero rates.
TransitionRates transition_rates(const PairGame& game, int k, const PopulationConfig& cfg);
TransitionRates transition_rates(const PayoffMatrix& m, Strategy i, Strategy j, int k,
                                 const PopulationConfig& cfg);

// Probability that a single mutant takes over a resident population. The
// game is seen from the mutant: ii = mutant vs mutant, jj = resident vs resident.
double fixation_probability(const PairGame& mutant_vs_resident, const PopulationConfig& cfg);
double fixation_probability(const PayoffMatrix& m, Strategy resident, Strategy mutant,
                            const PopulationConfig& cfg);

// Row-stochastic chain over monomorphic states. Entry (i, j) is the rate of
// moving from resident i to resident j.
struct TransitionMatrix {
  Eigen::MatrixXd rates;
};

// Off-diagonal (i, j) = fixation[i][j] / (q - 1), where fixation[i][j] is the
// probability that a j mutant fixes in an i population; the diagonal completes
// each row to one.
TransitionMatrix transition_matrix_from_fixation(const Eigen::MatrixXd& fixation);
TransitionMatrix build_transition_matrix(const PayoffMatrix& m, const PopulationConfig& cfg);

struct StationaryResult {
  Eigen::VectorXd frequencies;
  double residual = 0.0;  // max-norm of pi * M - pi
};

StationaryResult stationary_distribution(const TransitionMatrix& tm);

// Full small-mutation-limit analysis of one payoff matrix.
struct StationaryAnalysis {
  PayoffMatrix payoffs;
  PopulationConfig population;
  TransitionMatrix transitions;
  StationaryResult stationary;
};

StationaryAnalysis analyze(const PayoffMatrix& m, const PopulationConfig& cfg);

}  // namespace commitment

#endif  // COMMITMENT_EVOLUTION_HPP_
