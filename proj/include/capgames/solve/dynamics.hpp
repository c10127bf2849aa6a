#pragma once

#include <string>
#include <vector>

#include "capgames/solve/view.hpp"

namespace capgames::solve {

enum class PivotRule { MaxImprovement, RoundRobin };

PivotRule pivot_rule_from_name(const std::string& name);

struct TraceRow {
  int step = 0;
  int player = -1;
  Rational old_cost;  // cost = -utility (delay for DNC, negated payoff for GMG)
  Rational new_cost;
  Rational potential;  // family-facing Rosenthal value after the move
};

struct DynamicsResult {
  std::vector<int> profile;
  std::vector<TraceRow> trace;
};

struct DynamicsOptions {
  PivotRule rule = PivotRule::MaxImprovement;
  std::vector<int> initial;  // empty: every player on strategy 0
  std::uint64_t max_steps = 1'000'000;
};

/// Iterated single-player best responses until no player improves. The
/// utility potential strictly increases at every accepted move (checked);
/// exceeding max_steps therefore signals a non-potential payoff evaluator.
DynamicsResult best_response_dynamics(const FiniteGameView& view,
                                      const DynamicsOptions& options = {});

std::string trace_to_csv(const std::vector<TraceRow>& trace);

}  // namespace capgames::solve
