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

#ifndef COMMITMENT_SWEEP_HPP_
#define COMMITMENT_SWEEP_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "commitment/evolution.hpp"
#include "commitment/game.hpp"

namespace commitment {

enum class Axis : std::uint8_t { Budget, Gamma, Alpha, Beta, BenefitHigh };

// Axis names as they appear in spec files and CSV headers: u, gamma, alpha, beta, b_H.
std::string_view to_string(Axis axis);
std::optional<Axis> parse_axis(std::string_view name);

struct SweepAxis {
  Axis axis;
  std::vector<double> values;
};

// Inclusive grid start, start + step, ..., stop. Values are snapped to 1e-9 so
// that accumulated steps print cleanly.
std::vector<double> make_grid(double start, double stop, double step);

struct SweepSpec {
  GameParams game;
  double budget = 0.0;
  double participation_share = 0.0;
  PopulationConfig population;
  std::vector<Scheme> schemes{Scheme::Reward, Scheme::Punishment};
  std::vector<SweepAxis> axes;  // at most two; the first varies slowest
  std::string output;           // CSV file name, relative to the output directory
  std::string difference_output;  // optional reward-minus-punishment surface CSV

  // Throws InvalidParameter naming the axis whose grid is unusable.
  void validate() const;
};

// One stationary evaluation: resolved parameters, frequencies, To-C.
struct SweepRow {
  Scheme scheme = Scheme::None;
  GameParams game;
  double u = 0.0;
  double gamma = 0.0;
  PopulationConfig population;
  std::array<double, kNumStrategies> frequencies{};
  double to_c = 0.0;
};

// Raised when a single grid point fails; the message identifies the point.
class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluate a single parameter point under one scheme.
SweepRow evaluate_point(const GameParams& game, const IncentiveConfig& incentive,
                        const PopulationConfig& population);

// Rows are ordered by the grid (first axis outermost) and then by scheme in
// enum order. `jobs` worker threads share the grid; the output order does not
// depend on it.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned jobs = 1);

struct SurfacePoint {
  double u;
  double gamma;
  double alpha;
  double beta;
  double b_H;
  double to_c_reward;
  double to_c_punishment;
  double difference;  // reward minus punishment
};

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Point-by-point To-C(reward) - To-C(punishment). Both inputs must list the
// same parameter points in the same order.
std::vector<SurfacePoint> difference_surface(const std::vector<SweepRow>& reward_rows,
                                             const std::vector<SweepRow>& punishment_rows);

// Rows of one scheme, in their original order.
std::vector<SweepRow> rows_for_scheme(const std::vector<SweepRow>& rows, Scheme scheme);

}  // namespace commitment

#endif  // COMMITMENT_SWEEP_HPP_
