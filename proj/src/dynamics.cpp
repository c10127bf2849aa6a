#include "capgames/solve/dynamics.hpp"

#include "capgames/errors.hpp"

namespace capgames::solve {

namespace {

struct Move {
  int player = -1;
  int strategy = -1;
  Rational current;
  Rational improved;
  bool found = false;
};

// Best response of one player holding the rest of the profile fixed,
// breaking ties toward the lowest strategy index.
Move best_move_for(const FiniteGameView& view, const std::vector<int>& profile, int player) {
  std::vector<int> loads = view.profile_loads(profile);
  const auto& cur = view.strategies[profile[player]];
  Rational current = 0;
  for (std::int32_t r : cur) current += view.utility[r][loads[r] - 1];

  Move move;
  move.player = player;
  move.current = current;
  Rational best = current;
  for (int alt = 0; alt < view.strategy_count(); ++alt) {
    if (alt == profile[player]) continue;
    Rational value = 0;
    size_t ci = 0;
    for (std::int32_t r : view.strategies[alt]) {
      while (ci < cur.size() && cur[ci] < r) ++ci;
      int occupied = loads[r] + 1 - (ci < cur.size() && cur[ci] == r ? 1 : 0);
      value += view.utility[r][occupied - 1];
    }
    if (value > best) {
      best = value;
      move.strategy = alt;
      move.improved = value;
      move.found = true;
    }
  }
  return move;
}

}  // namespace

PivotRule pivot_rule_from_name(const std::string& name) {
  if (name == "max" || name == "max-improvement") return PivotRule::MaxImprovement;
  if (name == "roundrobin" || name == "round-robin") return PivotRule::RoundRobin;
  throw DomainError("unknown pivot rule: '" + name + "'");
}

DynamicsResult best_response_dynamics(const FiniteGameView& view, const DynamicsOptions& options) {
  if (view.strategy_count() == 0) throw DomainError("the strategy space is empty");
  DynamicsResult result;
  result.profile = options.initial.empty() ? std::vector<int>(view.players, 0) : options.initial;
  if (static_cast<int>(result.profile.size()) != view.players) {
    throw DomainError("initial profile size does not match player count");
  }

  Rational potential = view.utility_potential(result.profile);
  std::uint64_t steps = 0;
  int rr_player = 0;
  int rr_stable = 0;

  while (true) {
    Move chosen;
    if (options.rule == PivotRule::MaxImprovement) {
      for (int i = 0; i < view.players; ++i) {
        Move m = best_move_for(view, result.profile, i);
        if (!m.found) continue;
        // Largest improvement wins; lowest player index on ties.
        if (!chosen.found || m.improved - m.current > chosen.improved - chosen.current) {
          chosen = m;
        }
      }
      if (!chosen.found) break;
    } else {
      while (rr_stable < view.players) {
        Move m = best_move_for(view, result.profile, rr_player);
        rr_player = (rr_player + 1) % view.players;
        if (m.found) {
          chosen = m;
          rr_stable = 0;
          break;
        }
        ++rr_stable;
      }
      if (!chosen.found) break;
    }

    if (++steps > options.max_steps) {
      throw DomainError("dynamics iteration cap exceeded; payoff evaluator is not a potential game");
    }
    result.profile[chosen.player] = chosen.strategy;
    Rational next_potential = view.utility_potential(result.profile);
    if (!(next_potential > potential)) {
      throw DomainError("potential did not strictly improve along a best-response step");
    }
    // The potential change of a unilateral move equals the mover's change.
    if (next_potential - potential != chosen.improved - chosen.current) {
      throw DomainError("potential change does not match the mover's utility change");
    }
    potential = next_potential;
    TraceRow row;
    row.step = static_cast<int>(steps);
    row.player = chosen.player;
    row.old_cost = -chosen.current;
    row.new_cost = -chosen.improved;
    row.potential = view.convention == Convention::Cost ? -potential : potential;
    result.trace.push_back(std::move(row));
  }
  return result;
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
  std::string out = "step,player,old_delay,new_delay,potential\n";
  for (const TraceRow& row : trace) {
    out += std::to_string(row.step) + "," + std::to_string(row.player) + "," +
           format_rational(row.old_cost) + "," + format_rational(row.new_cost) + "," +
           format_rational(row.potential) + "\n";
  }
  return out;
}

}  // namespace capgames::solve
