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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "commitment/simulation.hpp"

using namespace commitment;
using S = Strategy;

namespace {

PayoffMatrix game2_reward() {
  const GameParams p{.c_H = 1.0, .c_L = 1.0, .b_H = 3.0, .b_L = 2.0, .alpha = 0.5, .epsilon = 1.0};
  return build_incentive_matrix(derive_base_payoffs(p), p.epsilon, {Scheme::Reward, 1.0, 0.0});
}

SimConfig small_run() {
  SimConfig cfg;
  cfg.payoffs = game2_reward();
  cfg.population = {30, 0.1};
  cfg.mutation_rate = 1e-3;
  cfg.steps = 200'000;
  cfg.burn_in = 20'000;
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST_CASE("same seed, same trajectory") {
  SimConfig cfg = small_run();
  cfg.trajectory_stride = 1000;
  const auto a = simulate(cfg);
  const auto b = simulate(cfg);
  CHECK(a.frequencies == b.frequencies);
  REQUIRE(a.trajectory.size() == b.trajectory.size());
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    CHECK(a.trajectory[i].counts == b.trajectory[i].counts);
  }
  cfg.seed = 6;
  CHECK(simulate(cfg).frequencies != a.frequencies);
}

TEST_CASE("frequencies form a simplex") {
  SimConfig cfg = small_run();
  cfg.trajectory_stride = 97;
  const auto emp = simulate(cfg);
  CHECK(emp.steps_counted == cfg.steps - cfg.burn_in);
  CHECK(std::abs(std::accumulate(emp.frequencies.begin(), emp.frequencies.end(), 0.0) - 1.0) <= 1e-9);
  for (double f : emp.frequencies) CHECK(f >= 0.0);
  CHECK(emp.trajectory.front().step == 0);
  CHECK(emp.trajectory.size() == 1 + cfg.steps / 97);
  for (const auto& p : emp.trajectory) {
    CHECK(std::accumulate(p.counts.begin(), p.counts.end(), 0) == cfg.population.pop_size);
    for (int c : p.counts) CHECK(c >= 0);
  }
}

TEST_CASE("without mutation a monomorphic start is absorbing") {
  SimConfig cfg = small_run();
  cfg.mutation_rate = 0.0;
  cfg.initial = S::ALD;
  const auto emp = simulate(cfg);
  for (Strategy s : kAllStrategies) {
    CHECK(emp.frequencies[index(s)] == (s == S::ALD ? 1.0 : 0.0));
  }
}

TEST_CASE("neutral drift visits every strategy equally") {
  SimConfig cfg = small_run();
  cfg.population = {100, 0.0};
  cfg.mutation_rate = 0.01;
  // Frequencies relax on a scale of N / mu = 1e4 updates; 5e7 steps keep the
  // Monte Carlo error well under the tolerance.
  cfg.steps = 50'000'000;
  cfg.burn_in = 1'000'000;
  const auto emp = simulate(cfg);
  for (double f : emp.frequencies) CHECK(std::abs(f - 0.125) <= 0.02);

  const StationaryAnalysis analytic = analyze(cfg.payoffs, cfg.population);
  CHECK(compare_to_analytic(emp, analytic, 0.02).passed);
}

TEST_CASE("comparison arithmetic") {
  std::array<double, kNumStrategies> uniform;
  uniform.fill(0.125);
  std::array<double, kNumStrategies> unit{};
  unit[0] = 1.0;

  const auto same = compare_frequencies(uniform, uniform, 0.05);
  CHECK(same.max_abs_deviation == 0.0);
  CHECK(same.total_variation == 0.0);
  CHECK(same.passed);

  const auto far = compare_frequencies(uniform, unit, 0.05);
  CHECK(far.max_abs_deviation == doctest::Approx(0.875));
  CHECK(far.total_variation == doctest::Approx(0.875));
  CHECK_FALSE(far.passed);
}

TEST_CASE("comparison checks provenance") {
  SimConfig cfg = small_run();
  cfg.steps = 1000;
  cfg.burn_in = 0;
  const auto emp = simulate(cfg);
  CHECK_NOTHROW(compare_to_analytic(emp, analyze(cfg.payoffs, cfg.population), 0.05));
  CHECK_THROWS_AS(compare_to_analytic(emp, analyze(cfg.payoffs, {30, 0.2}), 0.05),
                  ProvenanceMismatch);
  const PayoffMatrix other = build_commitment_matrix({2.0, 5.0, 1.0, 0.0}, 1.0);
  CHECK_THROWS_AS(compare_to_analytic(emp, analyze(other, cfg.population), 0.05),
                  ProvenanceMismatch);
}

TEST_CASE("config validation") {
  SimConfig cfg = small_run();
  cfg.burn_in = cfg.steps;
  CHECK_THROWS_AS(simulate(cfg), InvalidParameter);
  cfg = small_run();
  cfg.mutation_rate = 1.0;
  CHECK_THROWS_AS(simulate(cfg), InvalidParameter);
  cfg = small_run();
  cfg.population.pop_size = 1;
  CHECK_THROWS_AS(simulate(cfg), InvalidParameter);
}

TEST_CASE("trajectory csv") {
  const std::vector<TrajectoryPoint> t{{0, {100, 0, 0, 0, 0, 0, 0, 0}},
                                       {10, {99, 1, 0, 0, 0, 0, 0, 0}}};
  CHECK(format_trajectory_csv(t) ==
        "step,count_AHC,count_AHD,count_ALC,count_ALD,count_NHC,count_NHD,count_NLC,count_NLD\n"
        "0,100,0,0,0,0,0,0,0\n"
        "10,99,1,0,0,0,0,0,0\n");
}
