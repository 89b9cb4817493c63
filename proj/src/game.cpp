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

#include "commitment/game.hpp"

#include <cmath>
#include <string>

namespace commitment {

namespace {

constexpr std::array<std::string_view, kNumStrategies> kStrategyNames = {
    "AHC", "AHD", "ALC", "ALD", "NHC", "NHD", "NLC", "NLD"};

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw InvalidParameter(std::string(name) + " must be finite");
  }
}

}  // namespace

std::string_view to_string(Strategy s) { return kStrategyNames[index(s)]; }

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (kStrategyNames[index(s)] == name) return s;
  }
  return std::nullopt;
}

StrategyTraits strategy_traits(Strategy s) {
  const auto bits = static_cast<unsigned>(s);
  return {.accepts = (bits & 4u) == 0,
          .default_tech = (bits & 2u) == 0 ? Technology::High : Technology::Low,
          .complies = (bits & 1u) == 0};
}

Strategy strategy_from_traits(const StrategyTraits& traits) {
  unsigned bits = 0;
  if (!traits.accepts) bits |= 4u;
  if (traits.default_tech == Technology::Low) bits |= 2u;
  if (!traits.complies) bits |= 1u;
  return static_cast<Strategy>(bits);
}

void GameParams::validate() const {
  require_finite(c_H, "c_H");
  require_finite(c_L, "c_L");
  require_finite(b_H, "b_H");
  require_finite(b_L, "b_L");
  require_finite(alpha, "alpha");
  require_finite(epsilon, "epsilon");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidParameter("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (b_L > b_H) {
    throw InvalidParameter("b_L must not exceed b_H");
  }
  if (epsilon < 0.0) {
    throw InvalidParameter("epsilon must be non-negative");
  }
}

BasePayoffs derive_base_payoffs(const GameParams& params) {
  params.validate();
  return {.a = params.alpha * params.b_H - params.c_H,
          .b = params.b_H - params.c_H,
          .c = params.b_L - params.c_L,
          .d = params.alpha * params.b_L - params.c_L};
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::None: return "none";
    case Scheme::Reward: return "reward";
    case Scheme::Punishment: return "punishment";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "none") return Scheme::None;
  if (name == "reward") return Scheme::Reward;
  if (name == "punishment") return Scheme::Punishment;
  return std::nullopt;
}

void IncentiveConfig::validate() const {
  require_finite(budget, "u");
  require_finite(participation_share, "gamma");
  if (budget < 0.0) throw InvalidParameter("u must be non-negative");
  if (participation_share < 0.0 || participation_share > 1.0) {
    throw InvalidParameter("gamma must lie in [0, 1]");
  }
}

namespace {

void validate_epsilon(double epsilon) {
  require_finite(epsilon, "epsilon");
  if (epsilon < 0.0) throw InvalidParameter("epsilon must be non-negative");
}

// Without an agreement both players fall back to their default technology.
void fill_non_acceptor_rows(PayoffMatrix::Storage& m, const BasePayoffs& g) {
  const auto [a, b, c, d] = g;
  m[4] = {a, a, b, b, a, a, b, b};
  m[5] = {a, a, b, b, a, a, b, b};
  m[6] = {c, c, d, d, c, c, d, d};
  m[7] = {c, c, d, d, c, c, d, d};
}

PayoffMatrix::Storage commitment_entries(const BasePayoffs& g, double eps) {
  const auto [a, b, c, d] = g;
  const double shared = (b + c - eps) / 2.0;
  const double h = eps / 2.0;
  PayoffMatrix::Storage m{};
  m[0] = {shared, c - h, shared, shared, a, a, b, b};
  m[1] = {b - h, a - h, b - h, b - h, a, a, b, b};
  m[2] = {shared, c - h, shared, shared, c, c, d, d};
  m[3] = {shared, c - h, shared, d - h, c, c, d, d};
  fill_non_acceptor_rows(m, g);
  return m;
}

PayoffMatrix::Storage reward_entries(const BasePayoffs& g, double eps, double u,
                                     double gamma) {
  const auto [a, b, c, d] = g;
  const double shared = (b + c - eps) / 2.0;
  const double h = eps / 2.0;
  const double gu = gamma * u;
  PayoffMatrix::Storage m{};
  m[0] = {shared + u, c - h + u, shared + u, shared + u, a + gu, a + gu, b + gu, b + gu};
  m[1] = {b - h + gu, a - h + gu, b - h + gu, b - h + gu, a + gu, a + gu, b + gu, b + gu};
  m[2] = {shared + u, c - h + u, shared + u, shared + u, c + gu, c + gu, d + gu, d + gu};
  m[3] = {shared + u, c - h + gu, shared + u, d - h + gu, c + gu, c + gu, d + gu, d + gu};
  fill_non_acceptor_rows(m, g);
  return m;
}

PayoffMatrix::Storage punishment_entries(const BasePayoffs& g, double eps, double u,
                                         double gamma) {
  const auto [a, b, c, d] = g;
  const double h = eps / 2.0;
  const double gu = gamma * u;
  // Participants always collect gamma*u; defectors additionally lose (1 - gamma)*u.
  const double fined = (2.0 * gamma - 1.0) * u;
  const double l1 = (b + c - eps) / 2.0 + gu;
  const double l2 = c - h + gu;
  const double l3 = b + gu;
  const double l4 = b - h + fined;
  const double l5 = a - h + fined;
  const double l6 = c - h + fined;
  const double l7 = d - h + fined;
  PayoffMatrix::Storage m{};
  m[0] = {l1, l2, l1, l1, a + gu, a + gu, l3, l3};
  m[1] = {l4, l5, l4, l4, a + gu, a + gu, l3, l3};
  m[2] = {l1, l2, l1, l1, c + gu, c + gu, d + gu, d + gu};
  m[3] = {l1, l6, l1, l7, c + gu, c + gu, d + gu, d + gu};
  fill_non_acceptor_rows(m, g);
  return m;
}

}  // namespace

PayoffMatrix build_commitment_matrix(const BasePayoffs& base, double epsilon) {
  validate_epsilon(epsilon);
  return PayoffMatrix(commitment_entries(base, epsilon), base, epsilon, IncentiveConfig{});
}

PayoffMatrix build_incentive_matrix(const BasePayoffs& base, double epsilon,
                                    const IncentiveConfig& incentive) {
  validate_epsilon(epsilon);
  incentive.validate();
  const double u = incentive.budget;
  const double gamma = incentive.participation_share;
  switch (incentive.scheme) {
    case Scheme::None:
      return PayoffMatrix(commitment_entries(base, epsilon), base, epsilon, incentive);
    case Scheme::Reward:
      return PayoffMatrix(reward_entries(base, epsilon, u, gamma), base, epsilon, incentive);
    case Scheme::Punishment:
      return PayoffMatrix(punishment_entries(base, epsilon, u, gamma), base, epsilon,
                          incentive);
  }
  throw InvalidParameter("unknown incentive scheme");
}

}  // namespace commitment
