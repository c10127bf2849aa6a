#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "capgames/dnc/game.hpp"
#include "capgames/gmg/layout.hpp"
#include "capgames/rational.hpp"

namespace capgames::solve {

/// How results are reported: DNC families speak in delays (cost), GMG in
/// payoffs. Internally everything is a utility (higher is better).
enum class Convention { Cost, Payoff };

/// A symmetric game in congestion form: every player picks one strategy from
/// a shared list, each strategy is a set of resources, and a player's
/// utility is the sum of per-resource tables evaluated at the loads.
///
/// Utilities are exact. When every table entry times the common denominator
/// fits comfortably in int64 (checked against a priori magnitude bounds),
/// a scaled integer table drives the hot loops; otherwise arbitrary
/// precision rationals are used throughout.
struct FiniteGameView {
  Convention convention = Convention::Cost;
  int players = 1;
  int resources = 0;
  std::vector<std::vector<std::int32_t>> strategies;  // sorted resource ids
  std::vector<std::vector<Rational>> utility;         // [resource][load-1]

  bool fast = false;
  std::vector<std::vector<std::int64_t>> fast_utility;
  BigInt scale = 1;  // exact value = scaled / scale

  int strategy_count() const { return static_cast<int>(strategies.size()); }
  Rational from_scaled(std::int64_t value) const { return Rational(BigInt(value), scale); }

  std::vector<int> profile_loads(std::span<const int> profile) const;
  Rational player_utility(std::span<const int> profile, int player) const;
  /// Sum of utilities; equals social welfare in both conventions.
  Rational profile_welfare(std::span<const int> profile) const;
  /// Rosenthal potential over utility tables (increases along improving
  /// unilateral moves).
  Rational utility_potential(std::span<const int> profile) const;
  /// Family-facing potential for traces: the delay-convention Rosenthal
  /// value for Cost games, the payoff-convention one for Payoff games.
  Rational trace_potential(std::span<const int> profile) const;
};

/// View over a DNC/DncDa game with the given strategy list (normally
/// enumerate_strategies at the game's bound).
FiniteGameView make_view(const dnc::DncGame& game,
                         const std::vector<dnc::PathStrategy>& strategies);

/// View over a GMG layout with the given strategy list.
FiniteGameView make_view(const gmg::GmgLayout& layout,
                         const std::vector<gmg::IntervalStrategy>& strategies);

}  // namespace capgames::solve
