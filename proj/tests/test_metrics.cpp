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

#include "commitment/metrics.hpp"

using namespace commitment;
using S = Strategy;

namespace {

StationaryResult unit(Strategy s) {
  StationaryResult sr{Eigen::VectorXd::Zero(8), 0.0};
  sr.frequencies(static_cast<Eigen::Index>(index(s))) = 1.0;
  return sr;
}

}  // namespace

TEST_CASE("only compliant acceptors coordinate in self-play") {
  CHECK(coordination_weight(S::AHC) == 1.0);
  CHECK(coordination_weight(S::ALC) == 1.0);
  for (Strategy s : {S::AHD, S::ALD, S::NHC, S::NHD, S::NLC, S::NLD}) {
    CHECK(coordination_weight(s) == 0.0);
  }
}

TEST_CASE("self-play payoffs agree with the coordination weights") {
  // Coordinated self-play yields the shared payoff (b + c - eps) / 2; anything
  // else is a same-technology outcome (a, d, or their commitment variants).
  const BasePayoffs g{2.0, 5.0, 1.0, 0.0};
  const PayoffMatrix m = build_commitment_matrix(g, 1.0);
  for (Strategy s : kAllStrategies) {
    const bool shared = m(s, s) == (g.b + g.c - 1.0) / 2.0;
    CHECK(shared == (coordination_weight(s) == 1.0));
  }
}

TEST_CASE("total coordination") {
  StationaryResult uniform{Eigen::VectorXd::Constant(8, 0.125), 0.0};
  CHECK(total_coordination(uniform) == doctest::Approx(0.25));
  CHECK(total_coordination(unit(S::AHC)) == 1.0);
  CHECK(total_coordination(unit(S::ALC)) == 1.0);
  CHECK(total_coordination(unit(S::NLD)) == 0.0);

  StationaryResult wrong{Eigen::VectorXd::Constant(3, 1.0 / 3.0), 0.0};
  CHECK_THROWS_AS(total_coordination(wrong), InvalidParameter);
}
