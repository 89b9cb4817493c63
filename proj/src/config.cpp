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

#include "commitment/config.hpp"

#include <array>
#include <stdexcept>

namespace commitment {

using nlohmann::json;

namespace {

template <typename T>
void read_if_present(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

SweepAxis axis_from_json(const json& j) {
  const auto name = j.at("name").get<std::string>();
  const auto axis = parse_axis(name);
  if (!axis) throw InvalidParameter("unknown sweep axis '" + name + "'");
  if (j.contains("values")) return {*axis, j.at("values").get<std::vector<double>>()};
  try {
    return {*axis, make_grid(j.at("start").get<double>(), j.at("stop").get<double>(),
                             j.at("step").get<double>())};
  } catch (const InvalidParameter& e) {
    throw InvalidParameter("axis " + name + ": " + e.what());
  }
}

}  // namespace

SweepSpec sweep_spec_from_json(const json& input) {
  const json& j = input.contains("sweep") ? input.at("sweep") : input;
  SweepSpec spec;
  if (j.contains("game")) {
    const json& g = j.at("game");
    read_if_present(g, "c_H", spec.game.c_H);
    read_if_present(g, "c_L", spec.game.c_L);
    read_if_present(g, "b_H", spec.game.b_H);
    read_if_present(g, "b_L", spec.game.b_L);
    read_if_present(g, "alpha", spec.game.alpha);
    read_if_present(g, "epsilon", spec.game.epsilon);
  }
  read_if_present(j, "u", spec.budget);
  read_if_present(j, "gamma", spec.participation_share);
  if (j.contains("population")) {
    read_if_present(j.at("population"), "pop_size", spec.population.pop_size);
    read_if_present(j.at("population"), "beta", spec.population.beta);
  }
  if (j.contains("schemes")) {
    spec.schemes.clear();
    for (const auto& s : j.at("schemes")) {
      const auto name = s.get<std::string>();
      const auto scheme = parse_scheme(name);
      if (!scheme) throw InvalidParameter("unknown scheme '" + name + "'");
      spec.schemes.push_back(*scheme);
    }
  }
  if (j.contains("axes")) {
    for (const auto& a : j.at("axes")) spec.axes.push_back(axis_from_json(a));
  }
  read_if_present(j, "output", spec.output);
  read_if_present(j, "difference_output", spec.difference_output);
  spec.validate();
  return spec;
}

json to_json(const SweepSpec& spec) {
  json schemes = json::array();
  for (Scheme s : spec.schemes) schemes.push_back(std::string(to_string(s)));
  json axes = json::array();
  for (const auto& a : spec.axes) {
    axes.push_back({{"name", std::string(to_string(a.axis))}, {"values", a.values}});
  }
  json j = {{"game",
             {{"c_H", spec.game.c_H},
              {"c_L", spec.game.c_L},
              {"b_H", spec.game.b_H},
              {"b_L", spec.game.b_L},
              {"alpha", spec.game.alpha},
              {"epsilon", spec.game.epsilon}}},
            {"u", spec.budget},
            {"gamma", spec.participation_share},
            {"population", {{"pop_size", spec.population.pop_size}, {"beta", spec.population.beta}}},
            {"schemes", schemes},
            {"axes", axes},
            {"output", spec.output}};
  if (!spec.difference_output.empty()) j["difference_output"] = spec.difference_output;
  return j;
}

namespace {

struct GameVariant {
  const char* suffix;
  double b_H;
};

constexpr std::array<GameVariant, 2> kGames = {{{"game1", 6.0}, {"game2", 3.0}}};
constexpr std::array<const char*, 6> kFamilies = {"fig1", "fig2", "fig3", "fig4ab", "fig4c",
                                                  "fig5"};

// Shared caption settings: c_H = c_L = 1, b_L = 2, epsilon = 1, N = 100.
SweepSpec caption_defaults(double b_H) {
  SweepSpec spec;
  spec.game = GameParams{.c_H = 1.0, .c_L = 1.0, .b_H = b_H, .b_L = 2.0, .alpha = 0.5,
                         .epsilon = 1.0};
  spec.population = PopulationConfig{.pop_size = 100, .beta = 0.1};
  spec.schemes = {Scheme::Reward, Scheme::Punishment};
  return spec;
}

SweepSpec family_spec(std::string_view family, const GameVariant& game) {
  SweepSpec spec = caption_defaults(game.b_H);
  const std::string stem = std::string(family) + "-" + game.suffix;
  spec.output = stem + ".csv";
  if (family == "fig1" || family == "fig2") {
    spec.axes = {{Axis::Budget, make_grid(0.0, 2.0, 0.1)}};
  } else if (family == "fig3") {
    spec.budget = 1.0;
    spec.axes = {{Axis::Gamma, make_grid(0.0, 1.0, 0.05)}};
  } else if (family == "fig4ab") {
    spec.axes = {{Axis::Budget, make_grid(0.0, 2.0, 0.1)},
                 {Axis::Gamma, make_grid(0.0, 1.0, 0.05)}};
    spec.difference_output = stem + "-difference.csv";
  } else if (family == "fig4c") {
    spec.budget = 1.0;
    spec.axes = {{Axis::Alpha, make_grid(0.05, 0.95, 0.05)}};
  } else if (family == "fig5") {
    spec.budget = 1.0;
    spec.axes = {{Axis::Beta, {0.01, 0.1, 1.0}}, {Axis::Alpha, make_grid(0.05, 0.95, 0.05)}};
  } else {
    throw InvalidParameter("unknown preset '" + std::string(family) + "'");
  }
  return spec;
}

const char* describe_family(std::string_view family) {
  if (family == "fig1") return "To-C vs budget u (gamma = 0)";
  if (family == "fig2") return "strategy frequencies vs budget u (gamma = 0)";
  if (family == "fig3") return "To-C vs participation share gamma (u = 1)";
  if (family == "fig4ab") return "reward minus punishment To-C over u x gamma";
  if (family == "fig4c") return "To-C vs market competition alpha (u = 1, gamma = 0)";
  return "To-C vs alpha for beta in {0.01, 0.1, 1} (u = 1, gamma = 0)";
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const char* family : kFamilies) {
    names.emplace_back(family);
    for (const auto& g : kGames) names.push_back(std::string(family) + "-" + g.suffix);
  }
  return names;
}

Preset make_preset(std::string_view name) {
  for (const char* family : kFamilies) {
    const std::string_view f(family);
    if (name == f) {
      Preset p{std::string(name), describe_family(f), {}};
      for (const auto& g : kGames) p.sweeps.push_back(family_spec(f, g));
      return p;
    }
    for (const auto& g : kGames) {
      if (name == std::string(f) + "-" + g.suffix) {
        return {std::string(name), describe_family(f), {family_spec(f, g)}};
      }
    }
  }
  throw InvalidParameter("unknown preset '" + std::string(name) + "'");
}

}  // namespace commitment
