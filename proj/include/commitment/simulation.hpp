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

#ifndef COMMITMENT_SIMULATION_HPP_
#define COMMITMENT_SIMULATION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "commitment/evolution.hpp"
#include "commitment/game.hpp"

namespace commitment {

struct SimConfig {
  PayoffMatrix payoffs;
  PopulationConfig population;
  double mutation_rate = 1e-3;
  std::uint64_t steps = 10'000'000;
  std::uint64_t burn_in = 1'000'000;
  std::uint64_t seed = 1;
  // Everyone starts with this strategy; unset means a uniformly random start.
  std::optional<Strategy> initial;
  // Record counts every `trajectory_stride` steps; 0 disables the trajectory.
  std::uint64_t trajectory_stride = 0;

  void validate() const;
};

using StrategyCounts = std::array<int, kNumStrategies>;

struct TrajectoryPoint {
  std::uint64_t step;
  StrategyCounts counts;
};

struct EmpiricalFrequencies {
  std::array<double, kNumStrategies> frequencies{};
  std::uint64_t steps_counted = 0;
  std::uint64_t seed = 0;
  PayoffMatrix payoffs;
  PopulationConfig population;
  std::vector<TrajectoryPoint> trajectory;
};

// Asynchronous imitation with mutation. Each step one focal agent either
// mutates (probability mu, uniform over all eight strategies) or compares
// itself with a random other agent and copies it with the Fermi probability.
// Frequencies are averaged over the steps after burn-in.
EmpiricalFrequencies simulate(const SimConfig& cfg);

std::string format_trajectory_csv(const std::vector<TrajectoryPoint>& trajectory);

struct ComparisonReport {
  double max_abs_deviation;
  double total_variation;
  double tolerance;
  bool passed;
};

class ProvenanceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ComparisonReport compare_frequencies(const std::array<double, kNumStrategies>& empirical,
                                     const std::array<double, kNumStrategies>& analytic,
                                     double tolerance);

// Checks that both sides come from the same payoffs and population first.
ComparisonReport compare_to_analytic(const EmpiricalFrequencies& emp,
                                     const StationaryAnalysis& analysis, double tolerance);

}  // namespace commitment

#endif  // COMMITMENT_SIMULATION_HPP_
