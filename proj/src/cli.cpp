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

#include "commitment/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "commitment/config.hpp"
#include "commitment/evolution.hpp"
#include "commitment/game.hpp"
#include "commitment/metrics.hpp"
#include "commitment/simulation.hpp"
#include "commitment/sweep.hpp"
#include "commitment/table.hpp"

namespace commitment {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValueKind { Text, Real, Count };

struct KeyInfo {
  const char* key;
  ValueKind kind;
  const char* help;
};

constexpr KeyInfo kKeys[] = {
    {"scheme", ValueKind::Text, "incentive scheme: none, reward or punishment"},
    {"u", ValueKind::Real, "per-capita incentive budget"},
    {"gamma", ValueKind::Real, "share of the budget rewarding participation"},
    {"alpha", ValueKind::Real, "market competition factor in (0, 1)"},
    {"beta", ValueKind::Real, "selection intensity"},
    {"bH", ValueKind::Real, "benefit of the high technology"},
    {"bL", ValueKind::Real, "benefit of the low technology"},
    {"cH", ValueKind::Real, "cost of the high technology"},
    {"cL", ValueKind::Real, "cost of the low technology"},
    {"eps", ValueKind::Real, "cost of arranging a commitment"},
    {"pop-size", ValueKind::Count, "population size N"},
    {"seed", ValueKind::Count, "simulation seed"},
    {"mu", ValueKind::Real, "mutation probability per update"},
    {"steps", ValueKind::Count, "simulation update steps"},
    {"burn-in", ValueKind::Count, "steps discarded before averaging"},
    {"stride", ValueKind::Count, "trajectory stride (0 disables)"},
    {"tolerance", ValueKind::Real, "per-state agreement tolerance"},
    {"initial", ValueKind::Text, "initial strategy, or 'random'"},
};

const KeyInfo* find_key(std::string_view key) {
  for (const auto& k : kKeys) {
    if (key == k.key) return &k;
  }
  return nullptr;
}

json default_config() {
  return {{"scheme", "none"}, {"u", 0.0},       {"gamma", 0.0},          {"alpha", 0.5},
          {"beta", 0.1},      {"bH", 6.0},      {"bL", 2.0},             {"cH", 1.0},
          {"cL", 1.0},        {"eps", 1.0},     {"pop-size", 100},       {"seed", 1},
          {"mu", 1e-3},       {"steps", 10'000'000}, {"burn-in", 1'000'000}, {"stride", 0},
          {"tolerance", 0.05}, {"initial", "random"}};
}

// Resolved configuration plus the keys that were set explicitly.
struct RunConfig {
  json values = default_config();
  std::set<std::string> explicit_keys;
};

json convert_value(const KeyInfo& info, const json& raw, const std::string& where) {
  const std::string key = info.key;
  switch (info.kind) {
    case ValueKind::Text: {
      if (!raw.is_string()) throw ConfigError(where + ": " + key + " expects a string");
      const auto text = raw.get<std::string>();
      if (key == "scheme" && !parse_scheme(text)) {
        throw ConfigError(where + ": unknown scheme '" + text + "'");
      }
      if (key == "initial" && text != "random" && !parse_strategy(text)) {
        throw ConfigError(where + ": unknown strategy '" + text + "'");
      }
      return text;
    }
    case ValueKind::Real:
      if (!raw.is_number()) throw ConfigError(where + ": " + key + " expects a number");
      return raw.get<double>();
    case ValueKind::Count: {
      if (!raw.is_number()) throw ConfigError(where + ": " + key + " expects an integer");
      const double v = raw.get<double>();
      if (v < 0.0 || v != std::floor(v) || v > 9.0e18) {
        throw ConfigError(where + ": " + key + " expects a non-negative integer");
      }
      return static_cast<std::uint64_t>(v);
    }
  }
  return raw;
}

json text_to_json(const KeyInfo& info, const std::string& text, const std::string& where) {
  if (info.kind == ValueKind::Text) return text;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError(where + ": " + info.key + " expects a number, got '" + text + "'");
  }
  return v;
}

void set_value(RunConfig& cfg, const std::string& key, const json& raw, const std::string& where) {
  const KeyInfo* info = find_key(key);
  if (!info) throw ConfigError(where + ": unknown key '" + key + "'");
  cfg.values[key] = convert_value(*info, raw, where);
  cfg.explicit_keys.insert(key);
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// Either JSON (a flat object, or a manifest with a "config" object) or
// "key = value" lines with '#' comments.
void load_config_file(RunConfig& cfg, const fs::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(path.string() + ": " + e.what());
    }
    const json& obj = j.contains("config") ? j.at("config") : j;
    if (!obj.is_object()) throw ConfigError(path.string() + ": expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
      set_value(cfg, key, value, path.string() + ": key '" + key + "'");
    }
    return;
  }
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto sep = line.find_first_of("=:");
    if (sep == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, sep));
    const KeyInfo* info = find_key(key);
    if (!info) throw ConfigError(where + ": unknown key '" + key + "'");
    set_value(cfg, key, text_to_json(*info, trim(line.substr(sep + 1)), where), where);
  }
}

GameParams game_params(const json& v) {
  return GameParams{.c_H = v.at("cH").get<double>(),
                    .c_L = v.at("cL").get<double>(),
                    .b_H = v.at("bH").get<double>(),
                    .b_L = v.at("bL").get<double>(),
                    .alpha = v.at("alpha").get<double>(),
                    .epsilon = v.at("eps").get<double>()};
}

IncentiveConfig incentive_config(const json& v) {
  return IncentiveConfig{.scheme = *parse_scheme(v.at("scheme").get<std::string>()),
                         .budget = v.at("u").get<double>(),
                         .participation_share = v.at("gamma").get<double>()};
}

PopulationConfig population_config(const json& v) {
  const auto n = v.at("pop-size").get<std::uint64_t>();
  if (n > 1'000'000) throw InvalidParameter("pop_size is unreasonably large");
  return PopulationConfig{.pop_size = static_cast<int>(n), .beta = v.at("beta").get<double>()};
}

PayoffMatrix payoff_matrix(const json& v) {
  const GameParams game = game_params(v);
  return build_incentive_matrix(derive_base_payoffs(game), game.epsilon, incentive_config(v));
}

std::string manifest_text(const std::string& command, const std::string& key, const json& body,
                          const std::vector<std::string>& outputs) {
  json m = {{"tool", "commitment"},
            {"version", std::string(kToolVersion)},
            {"command", command},
            {key, body},
            {"outputs", outputs}};
  return m.dump(2) + "\n";
}

// Options shared by every subcommand, captured as raw text.
struct CommonOptions {
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;
  std::string config_path;
  std::string out_dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  for (const auto& k : kKeys) {
    auto* opt = cmd->add_option(std::string("--") + k.key, o.raw[k.key], k.help);
    if (std::string_view(k.key) == "scheme") {
      opt->check(CLI::IsMember({"none", "reward", "punishment"}));
    }
    o.opts[k.key] = opt;
  }
  cmd->add_option("--config", o.config_path, "key=value or JSON configuration file");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--jobs", o.jobs, "worker threads for independent grid points")
      ->check(CLI::PositiveNumber);
}

RunConfig resolve(const CommonOptions& o) {
  RunConfig cfg;
  if (!o.config_path.empty()) load_config_file(cfg, o.config_path);
  for (const auto& k : kKeys) {
    if (o.opts.at(k.key)->count() == 0) continue;
    const std::string where = std::string("flag --") + k.key;
    set_value(cfg, k.key, text_to_json(k, o.raw.at(k.key), where), where);
  }
  return cfg;
}

void print_matrix(std::ostream& out, const PayoffMatrix& m) {
  out << "strategy";
  for (Strategy s : kAllStrategies) out << ',' << to_string(s);
  out << '\n';
  for (Strategy row : kAllStrategies) {
    out << to_string(row);
    for (Strategy col : kAllStrategies) out << ',' << format_number(m(row, col));
    out << '\n';
  }
}

int cmd_matrix(const CommonOptions& o, std::ostream& out) {
  const RunConfig cfg = resolve(o);
  const PayoffMatrix m = payoff_matrix(cfg.values);
  std::ostringstream table;
  print_matrix(table, m);
  out << table.str();
  if (!o.out_dir.empty()) {
    const fs::path dir(o.out_dir);
    write_text_file(dir / "matrix.csv", table.str());
    write_text_file(dir / "matrix.manifest.json",
                    manifest_text("matrix", "config", cfg.values, {"matrix.csv"}));
  }
  return 0;
}

int cmd_stationary(const CommonOptions& o, std::ostream& out) {
  const RunConfig cfg = resolve(o);
  const json& v = cfg.values;
  const SweepRow row =
      evaluate_point(game_params(v), incentive_config(v), population_config(v));
  const std::string csv = format_sweep_csv({row});
  out << csv;
  if (!o.out_dir.empty()) {
    const fs::path dir(o.out_dir);
    write_text_file(dir / "stationary.csv", csv);
    write_text_file(dir / "stationary.manifest.json",
                    manifest_text("stationary", "config", v, {"stationary.csv"}));
  }
  return 0;
}

struct SweepOptions {
  std::string spec_path;
  std::string preset;
  bool list_presets = false;
};

void apply_overrides(SweepSpec& spec, const RunConfig& cfg) {
  const json& v = cfg.values;
  const auto has = [&](const char* k) { return cfg.explicit_keys.count(k) > 0; };
  if (has("cH")) spec.game.c_H = v.at("cH").get<double>();
  if (has("cL")) spec.game.c_L = v.at("cL").get<double>();
  if (has("bH")) spec.game.b_H = v.at("bH").get<double>();
  if (has("bL")) spec.game.b_L = v.at("bL").get<double>();
  if (has("alpha")) spec.game.alpha = v.at("alpha").get<double>();
  if (has("eps")) spec.game.epsilon = v.at("eps").get<double>();
  if (has("u")) spec.budget = v.at("u").get<double>();
  if (has("gamma")) spec.participation_share = v.at("gamma").get<double>();
  if (has("beta")) spec.population.beta = v.at("beta").get<double>();
  if (has("pop-size")) spec.population = population_config(v);
  if (has("scheme")) spec.schemes = {*parse_scheme(v.at("scheme").get<std::string>())};
  spec.validate();
}

int cmd_sweep(const CommonOptions& o, const SweepOptions& so, std::ostream& out) {
  if (so.list_presets) {
    for (const auto& name : preset_names()) {
      out << name << "  " << make_preset(name).description << '\n';
    }
    return 0;
  }
  if (so.spec_path.empty() == so.preset.empty()) {
    throw CLI::ValidationError("sweep", "exactly one of --spec or --preset is required");
  }
  std::vector<SweepSpec> specs;
  if (!so.preset.empty()) {
    specs = make_preset(so.preset).sweeps;
  } else {
    json j;
    try {
      j = json::parse(read_text_file(so.spec_path));
    } catch (const json::parse_error& e) {
      throw ConfigError(so.spec_path + ": " + e.what());
    }
    specs.push_back(sweep_spec_from_json(j));
    if (specs.back().output.empty()) specs.back().output = "sweep.csv";
  }
  const RunConfig cfg = resolve(o);
  const fs::path dir = o.out_dir.empty() ? fs::path(".") : fs::path(o.out_dir);
  for (SweepSpec& spec : specs) {
    apply_overrides(spec, cfg);
    const std::vector<SweepRow> rows = run_sweep(spec, o.jobs);
    emit_table(rows, dir / spec.output);
    std::vector<std::string> outputs{spec.output};
    if (!spec.difference_output.empty()) {
      const auto surface = difference_surface(rows_for_scheme(rows, Scheme::Reward),
                                              rows_for_scheme(rows, Scheme::Punishment));
      write_text_file(dir / spec.difference_output, format_surface_csv(surface));
      outputs.push_back(spec.difference_output);
    }
    const fs::path manifest = dir / (fs::path(spec.output).stem().string() + ".manifest.json");
    write_text_file(manifest, manifest_text("sweep", "sweep", to_json(spec), outputs));
    out << "wrote " << (dir / spec.output).string() << " (" << rows.size() << " rows)\n";
  }
  return 0;
}

int cmd_simulate(const CommonOptions& o, std::ostream& out) {
  const RunConfig cfg = resolve(o);
  const json& v = cfg.values;
  SimConfig sim;
  sim.payoffs = payoff_matrix(v);
  sim.population = population_config(v);
  sim.mutation_rate = v.at("mu").get<double>();
  sim.steps = v.at("steps").get<std::uint64_t>();
  sim.burn_in = v.at("burn-in").get<std::uint64_t>();
  sim.seed = v.at("seed").get<std::uint64_t>();
  sim.trajectory_stride = v.at("stride").get<std::uint64_t>();
  if (const auto init = v.at("initial").get<std::string>(); init != "random") {
    sim.initial = parse_strategy(init);
  }
  const double tolerance = v.at("tolerance").get<double>();

  const EmpiricalFrequencies emp = simulate(sim);
  const StationaryAnalysis analysis = analyze(sim.payoffs, sim.population);
  const ComparisonReport report = compare_to_analytic(emp, analysis, tolerance);

  std::string csv = "seed,steps_counted";
  for (Strategy s : kAllStrategies) csv += ",freq_" + std::string(to_string(s));
  csv += '\n' + std::to_string(emp.seed) + ',' + std::to_string(emp.steps_counted);
  for (double f : emp.frequencies) csv += ',' + format_number(f);
  csv += '\n';

  out << csv;
  out << "strategy,empirical,analytic,abs_diff\n";
  for (Strategy s : kAllStrategies) {
    const double e = emp.frequencies[index(s)];
    const double a = analysis.stationary.frequencies(static_cast<Eigen::Index>(index(s)));
    out << to_string(s) << ',' << format_number(e) << ',' << format_number(a) << ','
        << format_number(std::abs(e - a)) << '\n';
  }
  out << "max_abs_deviation=" << format_number(report.max_abs_deviation)
      << " total_variation=" << format_number(report.total_variation)
      << " tolerance=" << format_number(report.tolerance)
      << " agreement=" << (report.passed ? "pass" : "fail") << '\n';

  if (!o.out_dir.empty()) {
    const fs::path dir(o.out_dir);
    std::vector<std::string> outputs{"simulate.csv"};
    write_text_file(dir / "simulate.csv", csv);
    if (!emp.trajectory.empty()) {
      write_text_file(dir / "trajectory.csv", format_trajectory_csv(emp.trajectory));
      outputs.emplace_back("trajectory.csv");
    }
    write_text_file(dir / "simulate.manifest.json", manifest_text("simulate", "config", v, outputs));
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commitment with institutional incentives: payoffs, stationary "
               "distributions, sweeps and simulation",
               "commitment"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CommonOptions matrix_opts, stationary_opts, sweep_opts, simulate_opts;
  SweepOptions sweep_extra;
  auto* matrix = app.add_subcommand("matrix", "print the 8x8 payoff matrix");
  add_common(matrix, matrix_opts);
  auto* stationary = app.add_subcommand("stationary", "stationary distribution at one point");
  add_common(stationary, stationary_opts);
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep to CSV");
  add_common(sweep, sweep_opts);
  sweep->add_option("--spec", sweep_extra.spec_path, "JSON sweep spec or sweep manifest");
  sweep->add_option("--preset", sweep_extra.preset, "named figure preset");
  sweep->add_flag("--list-presets", sweep_extra.list_presets, "list preset names");
  auto* sim = app.add_subcommand("simulate", "agent-based simulation vs analytic result");
  add_common(sim, simulate_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (matrix->parsed()) return cmd_matrix(matrix_opts, out);
    if (stationary->parsed()) return cmd_stationary(stationary_opts, out);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, sweep_extra, out);
    if (sim->parsed()) return cmd_simulate(simulate_opts, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace commitment
