#pragma once

#include <cstdint>
#include <vector>

#include "capgames/dnc/game.hpp"

namespace capgames::dnc {

inline constexpr std::uint64_t kDefaultPathBudget = 2'000'000;

/// All simple s-t paths with total edge weight <= bound, in lexicographic
/// order of the vertex sequence. Empty when no feasible path exists.
std::vector<PathStrategy> enumerate_strategies(const DncGame& game, int bound,
                                               std::uint64_t budget = kDefaultPathBudget);

/// Uses the game's own bound.
std::vector<PathStrategy> enumerate_strategies(const DncGame& game);

/// Weight of the longest simple s-t path (the top of the capability
/// hierarchy). Exhaustive search; instances are desk-scale by design.
int longest_simple_st_path_weight(const DncGame& game,
                                  std::uint64_t budget = kDefaultPathBudget);

}  // namespace capgames::dnc
