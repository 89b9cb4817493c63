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

#ifndef COMMITMENT_GAME_HPP_
#define COMMITMENT_GAME_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace commitment {

// Raised for out-of-range model parameters. Values are rejected, never clamped.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Strategy XYZ: accept (A) or not (N) a commitment, default technology (H/L)
// when no commitment forms, comply (C) or defect (D) once committed.
// The enumerator order is the row/column order of every payoff matrix.
enum class Strategy : std::uint8_t { AHC, AHD, ALC, ALD, NHC, NHD, NLC, NLD };

inline constexpr std::size_t kNumStrategies = 8;

inline constexpr std::array<Strategy, kNumStrategies> kAllStrategies = {
    Strategy::AHC, Strategy::AHD, Strategy::ALC, Strategy::ALD,
    Strategy::NHC, Strategy::NHD, Strategy::NLC, Strategy::NLD};

constexpr std::size_t index(Strategy s) { return static_cast<std::size_t>(s); }

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

enum class Technology : std::uint8_t { High, Low };

struct StrategyTraits {
  bool accepts;
  Technology default_tech;
  bool complies;

  friend bool operator==(const StrategyTraits&, const StrategyTraits&) = default;
};

StrategyTraits strategy_traits(Strategy s);
Strategy strategy_from_traits(const StrategyTraits& traits);

// Raw parameters of the technology-adoption game.
struct GameParams {
  double c_H = 1.0;
  double c_L = 1.0;
  double b_H = 6.0;
  double b_L = 2.0;
  double alpha = 0.5;    // market competition, in (0, 1)
  double epsilon = 1.0;  // cost of arranging a commitment

  // Throws InvalidParameter naming the offending field.
  void validate() const;

  friend bool operator==(const GameParams&, const GameParams&) = default;
};

// Row-player payoffs of the 2x2 game: (H,H)=a, (H,L)=b, (L,H)=c, (L,L)=d.
struct BasePayoffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  friend bool operator==(const BasePayoffs&, const BasePayoffs&) = default;
};

BasePayoffs derive_base_payoffs(const GameParams& params);

enum class Scheme : std::uint8_t { None, Reward, Punishment };

std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

struct IncentiveConfig {
  Scheme scheme = Scheme::None;
  double budget = 0.0;               // per-capita budget u
  double participation_share = 0.0;  // gamma, share of u spent on participation

  void validate() const;

  friend bool operator==(const IncentiveConfig&, const IncentiveConfig&) = default;
};

// Dense 8x8 payoff matrix; entry (i, j) is the payoff of row strategy i
// against column strategy j. Carries the inputs that produced it.
class PayoffMatrix {
 public:
  using Storage = std::array<std::array<double, kNumStrategies>, kNumStrategies>;

  PayoffMatrix() = default;
  PayoffMatrix(const Storage& entries, const BasePayoffs& base, double epsilon,
               const IncentiveConfig& incentive)
      : entries_(entries), base_(base), epsilon_(epsilon), incentive_(incentive) {}

  // Matrix without provenance, for hand-built games.
  static PayoffMatrix from_entries(const Storage& entries) {
    return PayoffMatrix(entries, BasePayoffs{}, 0.0, IncentiveConfig{});
  }

  double operator()(Strategy row, Strategy col) const {
    return entries_[index(row)][index(col)];
  }
  double at(std::size_t row, std::size_t col) const { return entries_.at(row).at(col); }

  const Storage& entries() const { return entries_; }
  const BasePayoffs& base() const { return base_; }
  double epsilon() const { return epsilon_; }
  const IncentiveConfig& incentive() const { return incentive_; }

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  Storage entries_{};
  BasePayoffs base_{};
  double epsilon_ = 0.0;
  IncentiveConfig incentive_{};
};

// Payoffs with a commitment stage and no institutional incentives.
PayoffMatrix build_commitment_matrix(const BasePayoffs& base, double epsilon);

// Reward or punishment variant of the commitment matrix. Scheme::None yields
// the commitment matrix regardless of budget.
PayoffMatrix build_incentive_matrix(const BasePayoffs& base, double epsilon,
                                    const IncentiveConfig& incentive);

}  // namespace commitment

#endif  // COMMITMENT_GAME_HPP_
