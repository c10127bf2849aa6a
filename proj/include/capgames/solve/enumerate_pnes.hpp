#pragma once

#include <optional>
#include <vector>

#include "capgames/solve/view.hpp"

namespace capgames::solve {

/// Budget from CAPGAMES_BUDGET when set, otherwise 1e9 visited profiles.
std::uint64_t default_profile_budget();

struct EnumerateOptions {
  std::uint64_t budget = 0;  // 0 = default_profile_budget()
  int workers = 0;           // 0 = hardware concurrency
  bool centralized = false;  // also compute the unrestricted welfare maximum
  std::size_t max_stored = 200'000;
};

/// All pure Nash equilibria up to player permutation (the games are
/// symmetric, so equilibrium membership and welfare depend only on the
/// strategy multiset). Profiles are stored as non-decreasing index vectors.
struct EquilibriumSet {
  std::vector<std::vector<int>> profiles;  // canonical representatives
  std::uint64_t count = 0;                 // may exceed profiles.size()
  Rational bestw;
  Rational worstw;
  std::optional<Rational> centralized;

  bool empty() const { return count == 0; }
};

struct ViewDeviation {
  int player = -1;
  int strategy = -1;
  Rational current;
  Rational improved;
};

/// Exhaustive unilateral-deviation check against the view's strategy list.
std::optional<ViewDeviation> find_improving_deviation(const FiniteGameView& view,
                                                      std::span<const int> profile);
bool is_pne(const FiniteGameView& view, std::span<const int> profile);

/// Number of strategy multisets of size `players`.
BigInt multiset_count(int strategies, int players);

/// Exhaustive equilibrium enumeration over strategy multisets. Throws
/// BudgetExceeded up front when the multiset count exceeds the budget,
/// DomainError when the strategy space is empty.
EquilibriumSet enumerate_pnes(const FiniteGameView& view, const EnumerateOptions& options = {});

}  // namespace capgames::solve
