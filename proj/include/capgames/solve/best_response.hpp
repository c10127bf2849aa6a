#pragma once

#include <optional>
#include <vector>

#include "capgames/dnc/evaluate.hpp"
#include "capgames/gmg/layout.hpp"

namespace capgames::solve {

struct DncBestResponse {
  dnc::PathStrategy path;
  Rational delay;
};

/// Minimum-delay feasible path for one player against fixed opponent loads,
/// by dynamic programming over (vertex, remaining budget) layers. Zero-weight
/// edges are relaxed within each layer in topological order of the default
/// DAG. Cycles in the reconstructed walk carry zero delay and are spliced
/// out. Returns nullopt when no feasible path exists.
std::optional<DncBestResponse> best_response_dnc(const dnc::DncGame& game,
                                                 const dnc::LoadMap& others);

/// Same, with loads taken from a profile minus player i.
std::optional<DncBestResponse> best_response_dnc(const dnc::DncGame& game,
                                                 const dnc::Profile& profile, int player);

struct GmgBestResponse {
  gmg::IntervalStrategy strategy;
  Rational payoff;
};

/// Maximum-payoff strategy with at most `level` segments against fixed
/// opponent loads: per-resource marginal payoffs, per-line prefix sums, then
/// a segment DP over (first t resources, segments used).
GmgBestResponse best_response_gmg(const gmg::GmgLayout& layout,
                                  const std::vector<int>& opponent_loads, int level);

GmgBestResponse best_response_gmg(const gmg::GmgLayout& layout, const gmg::GmgProfile& profile,
                                  int player, int level);

}  // namespace capgames::solve
