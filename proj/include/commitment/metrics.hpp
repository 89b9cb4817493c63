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

#ifndef COMMITMENT_METRICS_HPP_
#define COMMITMENT_METRICS_HPP_

#include "commitment/evolution.hpp"
#include "commitment/game.hpp"

namespace commitment {

// Probability that two players of strategy s, matched with each other, end up
// on different technologies. Only compliant acceptors coordinate.
double coordination_weight(Strategy s);

// Total coordination (To-C): stationary mass weighted by coordination_weight,
// i.e. pi_AHC + pi_ALC.
double total_coordination(const StationaryResult& sr);

}  // namespace commitment

#endif  // COMMITMENT_METRICS_HPP_
