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

#ifndef COMMITMENT_TESTS_RANDOM_GAMES_HPP_
#define COMMITMENT_TESTS_RANDOM_GAMES_HPP_

#include <random>

#include "commitment/game.hpp"

namespace commitment::testing {

// Hand-rolled generators for property tests.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  GameParams game() {
    GameParams p;
    p.c_H = uniform(0.0, 3.0);
    p.c_L = uniform(0.0, 3.0);
    p.b_L = uniform(0.0, 6.0);
    p.b_H = p.b_L + uniform(0.0, 6.0);
    p.alpha = uniform(0.01, 0.99);
    p.epsilon = uniform(0.0, 3.0);
    return p;
  }

  IncentiveConfig incentive(Scheme scheme) {
    return {scheme, uniform(0.0, 3.0), uniform(0.0, 1.0)};
  }

  PayoffMatrix matrix(double lo = -5.0, double hi = 5.0) {
    PayoffMatrix::Storage m{};
    for (auto& row : m) {
      for (auto& x : row) x = uniform(lo, hi);
    }
    return PayoffMatrix::from_entries(m);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace commitment::testing

#endif  // COMMITMENT_TESTS_RANDOM_GAMES_HPP_
