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

#include "commitment/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "commitment/metrics.hpp"

namespace commitment {

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::Budget: return "u";
    case Axis::Gamma: return "gamma";
    case Axis::Alpha: return "alpha";
    case Axis::Beta: return "beta";
    case Axis::BenefitHigh: return "b_H";
  }
  return "unknown";
}

std::optional<Axis> parse_axis(std::string_view name) {
  for (Axis a : {Axis::Budget, Axis::Gamma, Axis::Alpha, Axis::Beta, Axis::BenefitHigh}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) || step <= 0.0 ||
      stop < start) {
    throw InvalidParameter("grid needs finite start <= stop and a positive step");
  }
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e9) / 1e9);
  }
  return grid;
}

namespace {

struct Point {
  GameParams game;
  IncentiveConfig incentive;
  PopulationConfig population;
};

void apply(Point& p, Axis axis, double value) {
  switch (axis) {
    case Axis::Budget: p.incentive.budget = value; break;
    case Axis::Gamma: p.incentive.participation_share = value; break;
    case Axis::Alpha: p.game.alpha = value; break;
    case Axis::Beta: p.population.beta = value; break;
    case Axis::BenefitHigh: p.game.b_H = value; break;
  }
}

void check_axis_value(const SweepSpec& spec, Axis axis, double v) {
  const auto name = std::string(to_string(axis));
  const auto bad = [&](const std::string& why) {
    std::ostringstream os;
    os << "axis " << name << ": value " << v << " " << why;
    throw InvalidParameter(os.str());
  };
  if (!std::isfinite(v)) bad("is not finite");
  switch (axis) {
    case Axis::Budget:
      if (v < 0.0) bad("must be non-negative");
      break;
    case Axis::Gamma:
      if (v < 0.0 || v > 1.0) bad("must lie in [0, 1]");
      break;
    case Axis::Alpha:
      if (v <= 0.0 || v >= 1.0) bad("must lie in (0, 1)");
      break;
    case Axis::Beta:
      if (v < 0.0) bad("must be non-negative");
      break;
    case Axis::BenefitHigh:
      if (v < spec.game.b_L) bad("must not be below b_L");
      break;
  }
}

std::string describe(const Point& p, Scheme scheme) {
  std::ostringstream os;
  os << "scheme=" << to_string(scheme) << " u=" << p.incentive.budget
     << " gamma=" << p.incentive.participation_share << " alpha=" << p.game.alpha
     << " beta=" << p.population.beta << " b_H=" << p.game.b_H;
  return os.str();
}

std::vector<Point> expand_grid(const SweepSpec& spec) {
  Point origin{spec.game, IncentiveConfig{Scheme::None, spec.budget, spec.participation_share},
               spec.population};
  std::vector<Point> points{origin};
  for (const SweepAxis& ax : spec.axes) {
    std::vector<Point> next;
    next.reserve(points.size() * ax.values.size());
    for (const Point& p : points) {
      for (double v : ax.values) {
        Point q = p;
        apply(q, ax.axis, v);
        next.push_back(q);
      }
    }
    points = std::move(next);
  }
  return points;
}

std::vector<Scheme> ordered_schemes(std::vector<Scheme> schemes) {
  std::sort(schemes.begin(), schemes.end());
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());
  return schemes;
}

}  // namespace

void SweepSpec::validate() const {
  game.validate();
  IncentiveConfig{Scheme::None, budget, participation_share}.validate();
  population.validate();
  if (schemes.empty()) throw InvalidParameter("sweep requests no scheme");
  if (axes.size() > 2) throw InvalidParameter("a sweep has at most two axes");
  if (axes.size() == 2 && axes[0].axis == axes[1].axis) {
    throw InvalidParameter("axis " + std::string(to_string(axes[0].axis)) + " listed twice");
  }
  for (const SweepAxis& ax : axes) {
    const auto name = std::string(to_string(ax.axis));
    if (ax.values.empty()) throw InvalidParameter("axis " + name + " has an empty grid");
    for (std::size_t i = 0; i < ax.values.size(); ++i) {
      check_axis_value(*this, ax.axis, ax.values[i]);
      if (i > 0 && !(ax.values[i] > ax.values[i - 1])) {
        throw InvalidParameter("axis " + name + " grid is not strictly increasing");
      }
    }
  }
}

SweepRow evaluate_point(const GameParams& game, const IncentiveConfig& incentive,
                        const PopulationConfig& population) {
  const BasePayoffs base = derive_base_payoffs(game);
  const PayoffMatrix m = build_incentive_matrix(base, game.epsilon, incentive);
  const StationaryAnalysis analysis = analyze(m, population);
  SweepRow row{.scheme = incentive.scheme,
               .game = game,
               .u = incentive.budget,
               .gamma = incentive.participation_share,
               .population = population};
  for (std::size_t s = 0; s < kNumStrategies; ++s) {
    row.frequencies[s] = analysis.stationary.frequencies(static_cast<Eigen::Index>(s));
  }
  row.to_c = total_coordination(analysis.stationary);
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  const std::vector<Point> points = expand_grid(spec);
  const std::vector<Scheme> schemes = ordered_schemes(spec.schemes);
  const std::size_t total = points.size() * schemes.size();

  std::vector<SweepRow> rows(total);
  std::vector<std::exception_ptr> failures(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      Point p = points[k / schemes.size()];
      p.incentive.scheme = schemes[k % schemes.size()];
      try {
        rows[k] = evaluate_point(p.game, p.incentive, p.population);
      } catch (const std::exception& e) {
        failures[k] = std::make_exception_ptr(
            SweepError("grid point " + describe(p, p.incentive.scheme) + ": " + e.what()));
      }
    }
  };

  const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(total, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

std::vector<SweepRow> rows_for_scheme(const std::vector<SweepRow>& rows, Scheme scheme) {
  std::vector<SweepRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [scheme](const SweepRow& r) { return r.scheme == scheme; });
  return out;
}

std::vector<SurfacePoint> difference_surface(const std::vector<SweepRow>& reward_rows,
                                             const std::vector<SweepRow>& punishment_rows) {
  if (reward_rows.size() != punishment_rows.size()) {
    throw GridMismatch("surfaces differ in size: " + std::to_string(reward_rows.size()) +
                       " vs " + std::to_string(punishment_rows.size()));
  }
  std::vector<SurfacePoint> surface;
  surface.reserve(reward_rows.size());
  for (std::size_t i = 0; i < reward_rows.size(); ++i) {
    const SweepRow& r = reward_rows[i];
    const SweepRow& p = punishment_rows[i];
    if (!(r.game == p.game) || r.u != p.u || r.gamma != p.gamma ||
        !(r.population == p.population)) {
      throw GridMismatch("surfaces disagree on the parameters of point " + std::to_string(i));
    }
    surface.push_back({.u = r.u,
                       .gamma = r.gamma,
                       .alpha = r.game.alpha,
                       .beta = r.population.beta,
                       .b_H = r.game.b_H,
                       .to_c_reward = r.to_c,
                       .to_c_punishment = p.to_c,
                       .difference = r.to_c - p.to_c});
  }
  return surface;
}

}  // namespace commitment
