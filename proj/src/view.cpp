#include "capgames/solve/view.hpp"

#include <algorithm>

#include "capgames/dnc/evaluate.hpp"

namespace capgames::solve {

namespace {

// Limit such that every sum formed by the solvers (profile welfare,
// potential) provably stays below 2^62.
const BigInt kMagnitudeLimit = (BigInt(1) << 62);

void try_enable_fast(FiniteGameView& view) {
  BigInt scale = 1;
  for (const auto& table : view.utility) {
    for (const Rational& v : table) {
      BigInt den = denominator(v);
      scale = scale / gcd(scale, den) * den;
    }
  }
  // Each scaled entry, and the largest sum the solvers can form.
  BigInt potential_bound = 0;
  BigInt max_entry_sum = 0;
  std::vector<std::vector<std::int64_t>> tables;
  tables.reserve(view.utility.size());
  for (const auto& table : view.utility) {
    std::vector<std::int64_t> scaled;
    BigInt row_max = 0;
    for (const Rational& v : table) {
      BigInt value = numerator(v) * (scale / denominator(v));
      BigInt magnitude = abs(value);
      if (magnitude >= kMagnitudeLimit) return;
      scaled.push_back(static_cast<std::int64_t>(value));
      row_max = std::max(row_max, magnitude);
      potential_bound += magnitude;
    }
    max_entry_sum += row_max;
    tables.push_back(std::move(scaled));
  }
  // Welfare sums at most `players` path sums; a path sum is at most the sum
  // of per-resource maxima.
  if (potential_bound >= kMagnitudeLimit) return;
  if (BigInt(view.players) * max_entry_sum >= kMagnitudeLimit) return;
  view.fast = true;
  view.scale = scale;
  view.fast_utility = std::move(tables);
}

}  // namespace

std::vector<int> FiniteGameView::profile_loads(std::span<const int> profile) const {
  std::vector<int> loads(resources, 0);
  for (int s : profile) {
    for (std::int32_t r : strategies[s]) ++loads[r];
  }
  return loads;
}

Rational FiniteGameView::player_utility(std::span<const int> profile, int player) const {
  std::vector<int> loads = profile_loads(profile);
  Rational total = 0;
  for (std::int32_t r : strategies[profile[player]]) total += utility[r][loads[r] - 1];
  return total;
}

Rational FiniteGameView::profile_welfare(std::span<const int> profile) const {
  std::vector<int> loads = profile_loads(profile);
  Rational total = 0;
  for (int s : profile) {
    for (std::int32_t r : strategies[s]) total += utility[r][loads[r] - 1];
  }
  return total;
}

Rational FiniteGameView::utility_potential(std::span<const int> profile) const {
  std::vector<int> loads = profile_loads(profile);
  Rational total = 0;
  for (int r = 0; r < resources; ++r) {
    for (int i = 1; i <= loads[r]; ++i) total += utility[r][i - 1];
  }
  return total;
}

Rational FiniteGameView::trace_potential(std::span<const int> profile) const {
  Rational value = utility_potential(profile);
  return convention == Convention::Cost ? -value : value;
}

FiniteGameView make_view(const dnc::DncGame& game,
                         const std::vector<dnc::PathStrategy>& strategies) {
  FiniteGameView view;
  view.convention = Convention::Cost;
  view.players = game.players;
  view.resources = game.edge_count();
  for (const dnc::Edge& e : game.edges) {
    std::vector<Rational> table;
    for (int x = 1; x <= game.players; ++x) table.push_back(-e.delay.at(x));
    view.utility.push_back(std::move(table));
  }
  for (const dnc::PathStrategy& path : strategies) {
    std::vector<int> edges = dnc::path_edges(game, path);
    std::vector<std::int32_t> footprint(edges.begin(), edges.end());
    std::sort(footprint.begin(), footprint.end());
    view.strategies.push_back(std::move(footprint));
  }
  try_enable_fast(view);
  return view;
}

FiniteGameView make_view(const gmg::GmgLayout& layout,
                         const std::vector<gmg::IntervalStrategy>& strategies) {
  FiniteGameView view;
  view.convention = Convention::Payoff;
  view.players = layout.players;
  view.resources = layout.resource_count();
  for (int t = 0; t < layout.resource_count(); ++t) {
    std::vector<Rational> table;
    for (int x = 1; x <= layout.players; ++x) table.push_back(layout.payoff_at(t, x));
    view.utility.push_back(std::move(table));
  }
  for (const gmg::IntervalStrategy& s : strategies) {
    std::vector<std::int32_t> footprint;
    for (int t = 0; t < layout.resource_count(); ++t) {
      if (s.line[t] == layout.resources[t].line) footprint.push_back(t);
    }
    view.strategies.push_back(std::move(footprint));
  }
  try_enable_fast(view);
  return view;
}

}  // namespace capgames::solve
