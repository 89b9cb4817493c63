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

#ifndef COMMITMENT_CONFIG_HPP_
#define COMMITMENT_CONFIG_HPP_

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "commitment/sweep.hpp"

namespace commitment {

inline constexpr std::string_view kToolVersion = "1.0.0";

// Sweep spec files are JSON:
//   {"game": {"c_H":1, "c_L":1, "b_H":6, "b_L":2, "alpha":0.5, "epsilon":1},
//    "u": 0, "gamma": 0, "population": {"pop_size":100, "beta":0.1},
//    "schemes": ["reward", "punishment"],
//    "axes": [{"name":"u", "start":0, "stop":2, "step":0.1}],
//    "output": "fig1-game1.csv"}
// An axis may list explicit "values" instead of start/stop/step. Omitted
// fields keep their defaults. A run manifest (which nests the spec under
// "sweep") is accepted as well.
SweepSpec sweep_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepSpec& spec);

struct Preset {
  std::string name;
  std::string description;
  std::vector<SweepSpec> sweeps;
};

// fig1, fig2, fig3, fig4ab, fig4c, fig5, each also as -game1 / -game2.
std::vector<std::string> preset_names();
Preset make_preset(std::string_view name);

}  // namespace commitment

#endif  // COMMITMENT_CONFIG_HPP_
