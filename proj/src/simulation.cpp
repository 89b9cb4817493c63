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

#include "commitment/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>


namespace commitment {

void SimConfig::validate() const {
  population.validate();
  if (!(mutation_rate >= 0.0 && mutation_rate < 1.0)) {
    throw InvalidParameter("mutation rate must lie in [0, 1)");
  }
  if (steps == 0) throw InvalidParameter("steps must be positive");
  if (burn_in >= steps) throw InvalidParameter("burn-in must be shorter than the run");
}

namespace {

// Bit-level conversions so trajectories do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), rejection sampled.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

double average_payoff(const PayoffMatrix& m, const StrategyCounts& counts, std::size_t s,
                      int pop_size) {
  double total = -m.at(s, s);
  for (std::size_t t = 0; t < kNumStrategies; ++t) total += counts[t] * m.at(s, t);
  return total / static_cast<double>(pop_size - 1);
}

}  // namespace

EmpiricalFrequencies simulate(const SimConfig& cfg) {
  cfg.validate();
  const int n = cfg.population.pop_size;
  const auto un = static_cast<std::uint64_t>(n);
  Rng rng(cfg.seed);

  std::vector<std::uint8_t> agents(static_cast<std::size_t>(n));
  StrategyCounts counts{};
  for (auto& a : agents) {
    a = cfg.initial ? static_cast<std::uint8_t>(index(*cfg.initial))
                    : static_cast<std::uint8_t>(rng.below(kNumStrategies));
    ++counts[a];
  }

  EmpiricalFrequencies out;
  out.seed = cfg.seed;
  out.payoffs = cfg.payoffs;
  out.population = cfg.population;
  if (cfg.trajectory_stride > 0) out.trajectory.push_back({0, counts});

  std::array<std::uint64_t, kNumStrategies> occupancy{};
  for (std::uint64_t t = 0; t < cfg.steps; ++t) {
    const std::size_t focal = rng.below(un);
    const std::uint8_t current = agents[focal];
    std::uint8_t adopted = current;
    if (rng.uniform() < cfg.mutation_rate) {
      adopted = static_cast<std::uint8_t>(rng.below(kNumStrategies));
    } else {
      std::size_t model = rng.below(un - 1);
      if (model >= focal) ++model;
      const std::uint8_t candidate = agents[model];
      if (candidate != current) {
        const double f_focal = average_payoff(cfg.payoffs, counts, current, n);
        const double f_model = average_payoff(cfg.payoffs, counts, candidate, n);
        if (rng.uniform() < fermi_prob(f_focal, f_model, cfg.population.beta)) {
          adopted = candidate;
        }
      }
    }
    if (adopted != current) {
      agents[focal] = adopted;
      --counts[current];
      ++counts[adopted];
    }
    if (t >= cfg.burn_in) {
      for (std::size_t s = 0; s < kNumStrategies; ++s) {
        occupancy[s] += static_cast<std::uint64_t>(counts[s]);
      }
    }
    if (cfg.trajectory_stride > 0 && (t + 1) % cfg.trajectory_stride == 0) {
      out.trajectory.push_back({t + 1, counts});
    }
  }

  out.steps_counted = cfg.steps - cfg.burn_in;
  const double denom = static_cast<double>(out.steps_counted) * static_cast<double>(n);
  for (std::size_t s = 0; s < kNumStrategies; ++s) {
    out.frequencies[s] = static_cast<double>(occupancy[s]) / denom;
  }
  return out;
}

std::string format_trajectory_csv(const std::vector<TrajectoryPoint>& trajectory) {
  std::string out = "step";
  for (Strategy s : kAllStrategies) {
    out += ",count_";
    out += to_string(s);
  }
  out += '\n';
  for (const auto& p : trajectory) {
    out += std::to_string(p.step);
    for (int c : p.counts) {
      out += ',';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

ComparisonReport compare_frequencies(const std::array<double, kNumStrategies>& empirical,
                                     const std::array<double, kNumStrategies>& analytic,
                                     double tolerance) {
  double max_dev = 0.0;
  double l1 = 0.0;
  for (std::size_t s = 0; s < kNumStrategies; ++s) {
    const double dev = std::abs(empirical[s] - analytic[s]);
    max_dev = std::max(max_dev, dev);
    l1 += dev;
  }
  return {.max_abs_deviation = max_dev,
          .total_variation = l1 / 2.0,
          .tolerance = tolerance,
          .passed = max_dev <= tolerance};
}

ComparisonReport compare_to_analytic(const EmpiricalFrequencies& emp,
                                     const StationaryAnalysis& analysis, double tolerance) {
  if (emp.payoffs.entries() != analysis.payoffs.entries()) {
    throw ProvenanceMismatch("simulation and analysis use different payoff matrices");
  }
  if (!(emp.population == analysis.population)) {
    throw ProvenanceMismatch("simulation and analysis use different population settings");
  }
  std::array<double, kNumStrategies> analytic{};
  for (std::size_t s = 0; s < kNumStrategies; ++s) {
    analytic[s] = analysis.stationary.frequencies(static_cast<Eigen::Index>(s));
  }
  return compare_frequencies(emp.frequencies, analytic, tolerance);
}

}  // namespace commitment
