#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "capgames/dnc/game.hpp"
#include "capgames/rational.hpp"

namespace capgames::gmg {

enum class ResourceKind { Gold, Mine };

struct Resource {
  Rational x;
  int line = 0;
  ResourceKind kind = ResourceKind::Gold;
};

/// Gold-and-Mines game: resources on K horizontal lines, covered by
/// piecewise-constant line assignments. Resources are kept sorted by x.
struct GmgLayout {
  std::vector<Resource> resources;   // sorted by x, all x distinct
  int lines = 1;                     // K
  int players = 1;                   // n
  int bound = 1;                     // capability level b
  std::vector<Rational> gold_payoff; // r_g(1..), positive
  std::vector<Rational> mine_payoff; // r_m(1..), negative

  int resource_count() const { return static_cast<int>(resources.size()); }
  const Rational& payoff_at(int resource, int load) const;

  /// Any line-assignment sequence is realizable with |E| segments.
  int max_level() const { return resource_count(); }
};

/// Sorts resources by x and returns the layout. Throws DomainError on
/// duplicate x-coordinates.
GmgLayout finalize_layout(GmgLayout layout);

dnc::ValidationReport validate_layout(const GmgLayout& layout);
void require_valid(const GmgLayout& layout);

/// One line index per resource position (in x-order). The canonical
/// interval form over line 1 is derived, not stored.
struct IntervalStrategy {
  std::vector<int> line;

  int segments() const;

  friend bool operator==(const IntervalStrategy& a, const IntervalStrategy& b) {
    return a.line == b.line;
  }
  friend bool operator<(const IntervalStrategy& a, const IntervalStrategy& b) {
    return a.line < b.line;
  }
};

IntervalStrategy constant_strategy(int resource_count, int line);

/// Canonical closed integer intervals [a-, a+] of positions where the
/// strategy sits on line 1 (two-line games). Maximal runs, so gaps between
/// intervals are >= 2 by construction.
std::vector<std::pair<int, int>> line1_intervals(const IntervalStrategy& strategy);

/// Inverse of line1_intervals for K=2.
IntervalStrategy strategy_from_intervals(int resource_count,
                                         const std::vector<std::pair<int, int>>& intervals);

struct GmgProfile {
  std::vector<IntervalStrategy> strategies;
};

void require_valid_strategy(const GmgLayout& layout, const IntervalStrategy& strategy);
void require_valid_profile(const GmgLayout& layout, const GmgProfile& profile);

/// Load per resource: the number of players covering it.
std::vector<int> loads(const GmgLayout& layout, const GmgProfile& profile);

/// u_i = sum of r_e(x_e) over covered resources.
Rational payoff(const GmgLayout& layout, const GmgProfile& profile, int player);

/// W = total payoff.
Rational social_welfare(const GmgLayout& layout, const GmgProfile& profile);

/// Rosenthal potential in payoff convention: sum_e sum_{i<=x_e} r_e(i).
Rational potential(const GmgLayout& layout, const GmgProfile& profile);

/// Gold welfare function w_g(x) = x * r_g(x), 1 <= x <= players.
Rational gold_welfare(const GmgLayout& layout, int load);

/// Gold and mine counts covered by a strategy, plus the count of gold
/// covered jointly with a fixed opponent.
struct CoverageStats {
  int gold = 0;
  int mines = 0;
  int shared_gold = 0;
};

CoverageStats coverage(const GmgLayout& layout, const IntervalStrategy& strategy,
                       const IntervalStrategy* opponent = nullptr);

inline constexpr std::uint64_t kDefaultStrategyBudget = 4'000'000;

/// All assignments with at most level-1 value changes (= at most `level`
/// segments), in lexicographic order of the line sequence.
std::vector<IntervalStrategy> enumerate_strategies(const GmgLayout& layout, int level,
                                                   std::uint64_t budget = kDefaultStrategyBudget);

/// Closed-form count: sum_{j<=level-1} C(|E|-1, j) * K * (K-1)^j.
BigInt strategy_count(int resource_count, int lines, int level);

}  // namespace capgames::gmg
