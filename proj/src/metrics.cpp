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

#include "commitment/metrics.hpp"

namespace commitment {

double coordination_weight(Strategy s) {
  const StrategyTraits t = strategy_traits(s);
  return t.accepts && t.complies ? 1.0 : 0.0;
}

double total_coordination(const StationaryResult& sr) {
  if (sr.frequencies.size() != static_cast<Eigen::Index>(kNumStrategies)) {
    throw InvalidParameter("stationary result must cover all eight strategies");
  }
  double total = 0.0;
  for (Strategy s : kAllStrategies) {
    total += sr.frequencies(static_cast<Eigen::Index>(index(s))) * coordination_weight(s);
  }
  return total;
}

}  // namespace commitment
