#include "capgames/gmg/convert.hpp"

#include <string>

#include "capgames/errors.hpp"

namespace capgames::gmg {

namespace {

std::string pad(int value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

std::string grid_id(int column, int line) {
  return "g" + pad(column, 3) + "_" + pad(line, 2);
}

}  // namespace

int DncDaConversion::grid_vertex(int column, int line) const {
  int v = game.vertex_index(grid_id(column, line));
  if (v < 0) throw DomainError("conversion grid vertex missing");
  return v;
}

dnc::PathStrategy DncDaConversion::path_for(const IntervalStrategy& strategy) const {
  if (static_cast<int>(strategy.line.size()) != resource_count) {
    throw DomainError("strategy length does not match the converted layout");
  }
  dnc::PathStrategy path;
  path.vertices.push_back(game.source);
  int current = strategy.line.empty() ? 0 : strategy.line.front();
  path.vertices.push_back(grid_vertex(0, current));
  for (int i = 0; i < resource_count; ++i) {
    // Cross resource i+1's column edge on the current line, switching first
    // when the strategy changes lines at this position.
    if (strategy.line[i] != current) {
      current = strategy.line[i];
      path.vertices.push_back(grid_vertex(i, current));
    }
    path.vertices.push_back(grid_vertex(i + 1, current));
  }
  path.vertices.push_back(game.sink);
  return path;
}

IntervalStrategy DncDaConversion::strategy_for(const dnc::PathStrategy& path) const {
  IntervalStrategy strategy = constant_strategy(resource_count, 0);
  // The line while crossing from column i to column i+1 covers resource i+1.
  std::vector<int> column_of(game.vertex_count(), -1);
  std::vector<int> line_of(game.vertex_count(), -1);
  for (int c = 0; c <= resource_count; ++c) {
    for (int l = 0; l < lines; ++l) {
      int v = grid_vertex(c, l);
      column_of[v] = c;
      line_of[v] = l;
    }
  }
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    int a = path.vertices[i];
    int b = path.vertices[i + 1];
    if (column_of[a] >= 0 && column_of[b] == column_of[a] + 1) {
      strategy.line[column_of[a]] = line_of[a];
    }
  }
  return strategy;
}

DncDaConversion to_dncda(const GmgLayout& layout) {
  require_valid(layout);
  const int n = layout.resource_count();
  const int k = layout.lines;

  dnc::DncGameBuilder builder(dnc::Variant::DncDa);
  builder.source("s").sink("t");
  builder.bound(layout.bound).players(layout.players);

  dnc::DelayTable zero = dnc::constant_table(layout.players, Rational(0));

  for (int j = 0; j < k; ++j) {
    builder.add_edge("s", grid_id(0, j), 1, zero);
    builder.add_edge(grid_id(n, j), "t", 0, zero);
    for (int i = 0; i < n; ++i) {
      dnc::DelayTable delay = zero;
      if (layout.resources[i].line == j) {
        // Horizontal edge passing resource i+1 on its own line: delay -r.
        std::vector<Rational> values;
        for (int load = 1; load <= layout.players; ++load) {
          values.push_back(-layout.payoff_at(i, load));
        }
        delay = dnc::DelayTable(std::move(values));
      }
      builder.add_edge(grid_id(i, j), grid_id(i + 1, j), 0, delay);
    }
  }
  // Switching edges exist only at interior columns.
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int j2 = 0; j2 < k; ++j2) {
        if (j != j2) builder.add_edge(grid_id(i, j), grid_id(i, j2), 1, zero);
      }
    }
  }

  DncDaConversion conversion;
  conversion.game = builder.build();
  conversion.resource_count = n;
  conversion.lines = k;
  return conversion;
}

}  // namespace capgames::gmg
