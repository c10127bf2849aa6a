#pragma once

#include "capgames/dnc/game.hpp"
#include "capgames/gmg/layout.hpp"

namespace capgames::gmg {

/// GMG embedded as a DncDa grid: one column of vertices between consecutive
/// resources, zero-weight horizontal default edges carrying delay -r for the
/// resource they pass, unit switching edges inside interior columns, and a
/// unit source fan. Sink edges are the columns' defaults, so a strategy with
/// k segments maps to a path of weighted length exactly k and the DncDa
/// bound equals the GMG capability level.
struct DncDaConversion {
  dnc::DncGame game;
  int resource_count = 0;
  int lines = 0;

  dnc::PathStrategy path_for(const IntervalStrategy& strategy) const;
  IntervalStrategy strategy_for(const dnc::PathStrategy& path) const;

  // Grid vertex index for column i (0..resource_count) on line j.
  int grid_vertex(int column, int line) const;
};

DncDaConversion to_dncda(const GmgLayout& layout);

}  // namespace capgames::gmg
