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

#include "commitment/game.hpp"
#include "random_games.hpp"

using namespace commitment;
using S = Strategy;

namespace {

const BasePayoffs kGame1{.a = 2.0, .b = 5.0, .c = 1.0, .d = 0.0};

GameParams caption_params(double b_H) {
  return {.c_H = 1.0, .c_L = 1.0, .b_H = b_H, .b_L = 2.0, .alpha = 0.5, .epsilon = 1.0};
}

}  // namespace

TEST_CASE("base payoffs follow the technology-adoption game") {
  CHECK(derive_base_payoffs(caption_params(6.0)) == BasePayoffs{2.0, 5.0, 1.0, 0.0});
  CHECK(derive_base_payoffs(caption_params(3.0)) == BasePayoffs{0.5, 2.0, 1.0, 0.0});

  GameParams same{.c_H = 0.7, .c_L = 0.7, .b_H = 4.0, .b_L = 4.0, .alpha = 0.3, .epsilon = 0.0};
  const BasePayoffs g = derive_base_payoffs(same);
  CHECK(g.a == g.d);
  CHECK(g.b == g.c);
}

TEST_CASE("invalid game parameters are rejected, not clamped") {
  GameParams p = caption_params(6.0);
  p.alpha = 1.0;
  CHECK_THROWS_AS(derive_base_payoffs(p), InvalidParameter);
  p.alpha = 0.0;
  CHECK_THROWS_AS(derive_base_payoffs(p), InvalidParameter);
  p = caption_params(1.0);  // b_H < b_L
  CHECK_THROWS_AS(derive_base_payoffs(p), InvalidParameter);
  p = caption_params(6.0);
  p.epsilon = -0.1;
  CHECK_THROWS_AS(derive_base_payoffs(p), InvalidParameter);
  p = caption_params(6.0);
  p.c_H = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(derive_base_payoffs(p), InvalidParameter);
}

TEST_CASE("strategy traits") {
  CHECK(strategy_traits(S::AHC) == StrategyTraits{true, Technology::High, true});
  CHECK(strategy_traits(S::ALD) == StrategyTraits{true, Technology::Low, false});
  CHECK(strategy_traits(S::NLD) == StrategyTraits{false, Technology::Low, false});
  for (Strategy s : kAllStrategies) {
    CHECK(strategy_from_traits(strategy_traits(s)) == s);
    CHECK(parse_strategy(to_string(s)) == s);
  }
  CHECK_FALSE(parse_strategy("XYZ").has_value());
}

TEST_CASE("commitment matrix entries for game 1") {
  const PayoffMatrix m = build_commitment_matrix(kGame1, 1.0);
  CHECK(m(S::AHC, S::AHC) == doctest::Approx(2.5));
  CHECK(m(S::AHD, S::AHD) == doctest::Approx(1.5));
  CHECK(m(S::AHC, S::AHD) == doctest::Approx(0.5));
  CHECK(m(S::AHD, S::AHC) == doctest::Approx(4.5));
  CHECK(m(S::ALD, S::ALD) == doctest::Approx(-0.5));
  CHECK(m(S::NHC, S::ALC) == 5.0);
  CHECK(m(S::NLD, S::AHD) == 1.0);
  CHECK(m(S::AHC, S::NLC) == 5.0);
  CHECK(m(S::ALC, S::NHD) == 1.0);
}

TEST_CASE("incentive matrix entries for game 1") {
  const PayoffMatrix reward =
      build_incentive_matrix(kGame1, 1.0, {Scheme::Reward, 1.0, 0.0});
  CHECK(reward(S::AHC, S::AHD) == doctest::Approx(1.5));
  CHECK(reward(S::AHC, S::AHC) == doctest::Approx(3.5));
  CHECK(reward(S::AHD, S::AHC) == doctest::Approx(4.5));  // defectors get only gamma*u
  CHECK(reward(S::ALD, S::AHC) == doctest::Approx(3.5));

  const PayoffMatrix punish =
      build_incentive_matrix(kGame1, 1.0, {Scheme::Punishment, 1.0, 0.0});
  CHECK(punish(S::AHD, S::AHD) == doctest::Approx(0.5));
  CHECK(punish(S::AHD, S::AHC) == doctest::Approx(3.5));
  CHECK(punish(S::ALD, S::AHD) == doctest::Approx(-0.5));
  CHECK(punish(S::ALD, S::ALD) == doctest::Approx(-1.5));
  CHECK(punish(S::AHC, S::AHC) == doctest::Approx(2.5));

  const PayoffMatrix mixed =
      build_incentive_matrix(kGame1, 1.0, {Scheme::Punishment, 2.0, 0.25});
  // lambda_3 = b + gamma*u, lambda_4 = b - eps/2 + (2 gamma - 1) u
  CHECK(mixed(S::AHD, S::NLC) == doctest::Approx(5.5));
  CHECK(mixed(S::AHD, S::ALC) == doctest::Approx(3.5));
}

TEST_CASE("invalid incentive configuration") {
  CHECK_THROWS_AS(build_incentive_matrix(kGame1, 1.0, {Scheme::Reward, -0.1, 0.0}),
                  InvalidParameter);
  CHECK_THROWS_AS(build_incentive_matrix(kGame1, 1.0, {Scheme::Reward, 1.0, 1.1}),
                  InvalidParameter);
  CHECK_THROWS_AS(build_incentive_matrix(kGame1, 1.0, {Scheme::Punishment, 1.0, -0.1}),
                  InvalidParameter);
  CHECK(parse_scheme("reward") == Scheme::Reward);
  CHECK_FALSE(parse_scheme("bribe").has_value());
}

TEST_CASE("payoff matrix properties over random parameters") {
  testing::Generator gen(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const GameParams params = gen.game();
    const BasePayoffs base = derive_base_payoffs(params);
    const double eps = params.epsilon;
    const PayoffMatrix plain = build_commitment_matrix(base, eps);
    const IncentiveConfig rw = gen.incentive(Scheme::Reward);
    const IncentiveConfig pn{Scheme::Punishment, rw.budget, rw.participation_share};
    const PayoffMatrix reward = build_incentive_matrix(base, eps, rw);
    const PayoffMatrix punish = build_incentive_matrix(base, eps, pn);
    const PayoffMatrix none =
        build_incentive_matrix(base, eps, {Scheme::None, rw.budget, rw.participation_share});
    CHECK(none.entries() == plain.entries());

    for (std::size_t i = 0; i < kNumStrategies; ++i) {
      for (std::size_t j = 0; j < kNumStrategies; ++j) {
        if (i >= 4) {
          CHECK(reward.at(i, j) == plain.at(i, j));
          CHECK(punish.at(i, j) == plain.at(i, j));
        }
        CHECK(reward.at(i, j) - plain.at(i, j) >= 0.0);
      }
    }
    CHECK(plain.entries()[4] == plain.entries()[5]);
    CHECK(plain.entries()[6] == plain.entries()[7]);

    const double shared = (base.b + base.c - eps) / 2.0;
    for (auto [r, c] : {std::pair{S::AHC, S::ALD}, {S::ALD, S::AHC}, {S::AHC, S::ALC},
                        {S::ALC, S::AHC}, {S::AHC, S::AHC}, {S::ALC, S::ALC}}) {
      CHECK(plain(r, c) == doctest::Approx(shared).epsilon(1e-14));
    }

    const double u = rw.budget;
    const PayoffMatrix r0 = build_incentive_matrix(base, eps, {Scheme::Reward, 0.0, rw.participation_share});
    const PayoffMatrix p0 = build_incentive_matrix(base, eps, {Scheme::Punishment, 0.0, rw.participation_share});
    const PayoffMatrix r1 = build_incentive_matrix(base, eps, {Scheme::Reward, u, 1.0});
    const PayoffMatrix p1 = build_incentive_matrix(base, eps, {Scheme::Punishment, u, 1.0});
    for (std::size_t i = 0; i < kNumStrategies; ++i) {
      for (std::size_t j = 0; j < kNumStrategies; ++j) {
        CHECK(std::abs(r0.at(i, j) - plain.at(i, j)) <= 1e-12);
        CHECK(std::abs(p0.at(i, j) - plain.at(i, j)) <= 1e-12);
        CHECK(std::abs(r1.at(i, j) - p1.at(i, j)) <= 1e-12);
      }
    }
  }
}
