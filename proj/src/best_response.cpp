#include "capgames/solve/best_response.hpp"

#include <algorithm>
#include <queue>

#include "capgames/errors.hpp"

namespace capgames::solve {

namespace {

// Topological order of the zero-weight subgraph (validated games have it
// acyclic). Vertices without zero edges appear too; order is stable.
std::vector<int> zero_subgraph_topo_order(const dnc::DncGame& game) {
  std::vector<int> indeg(game.vertex_count(), 0);
  for (const dnc::Edge& e : game.edges) {
    if (e.weight == 0) ++indeg[e.to];
  }
  std::vector<int> order;
  order.reserve(game.vertex_count());
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < game.vertex_count(); ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int e : game.out_edges[v]) {
      if (game.edges[e].weight != 0) continue;
      if (--indeg[game.edges[e].to] == 0) ready.push(game.edges[e].to);
    }
  }
  if (static_cast<int>(order.size()) != game.vertex_count()) {
    throw DomainError("zero-weight subgraph contains a cycle");
  }
  return order;
}

struct Cell {
  bool reached = false;
  Rational value;
  int pred_vertex = -1;
  int pred_layer = -1;
};

}  // namespace

std::optional<DncBestResponse> best_response_dnc(const dnc::DncGame& game,
                                                 const dnc::LoadMap& others) {
  const int n = game.vertex_count();
  const int b = game.bound;
  std::vector<int> topo = zero_subgraph_topo_order(game);

  // f[v][d]: minimum delay over walks s->v of weight <= d.
  std::vector<std::vector<Cell>> f(n, std::vector<Cell>(b + 1));
  auto edge_cost = [&](int e) { return game.edges[e].delay.at(others[e] + 1); };

  auto relax = [&](int v, int d, const Rational& value, int pv, int pd) {
    Cell& cell = f[v][d];
    if (!cell.reached || value < cell.value) {
      cell.reached = true;
      cell.value = value;
      cell.pred_vertex = pv;
      cell.pred_layer = pd;
    }
  };

  for (int d = 0; d <= b; ++d) {
    if (d == 0) {
      relax(game.source, 0, Rational(0), -1, -1);
    } else {
      // Carry shorter paths forward, then bring in unit edges from d-1.
      for (int v = 0; v < n; ++v) {
        if (f[v][d - 1].reached) relax(v, d, f[v][d - 1].value, v, d - 1);
      }
      for (int u = 0; u < n; ++u) {
        if (!f[u][d - 1].reached) continue;
        for (int e : game.out_edges[u]) {
          if (game.edges[e].weight != 1) continue;
          relax(game.edges[e].to, d, f[u][d - 1].value + edge_cost(e), u, d - 1);
        }
      }
    }
    // Zero-weight relaxations stay in the same layer; the default DAG's
    // topological order makes one pass sufficient.
    for (int u : topo) {
      if (!f[u][d].reached) continue;
      for (int e : game.out_edges[u]) {
        if (game.edges[e].weight != 0) continue;
        relax(game.edges[e].to, d, f[u][d].value + edge_cost(e), u, d);
      }
    }
  }

  if (!f[game.sink][b].reached) return std::nullopt;

  // Reconstruct the walk, then splice out cycles; optimality forces every
  // spliced cycle to carry exactly zero delay.
  std::vector<int> walk;
  int v = game.sink, d = b;
  while (v != -1) {
    if (walk.empty() || walk.back() != v) walk.push_back(v);
    Cell& cell = f[v][d];
    int pv = cell.pred_vertex, pd = cell.pred_layer;
    v = pv;
    d = pd;
  }
  std::reverse(walk.begin(), walk.end());

  std::vector<int> path;
  std::vector<int> pos(n, -1);
  for (int vertex : walk) {
    if (pos[vertex] >= 0) {
      for (size_t k = pos[vertex] + 1; k < path.size(); ++k) pos[path[k]] = -1;
      path.resize(pos[vertex] + 1);
    } else {
      pos[vertex] = static_cast<int>(path.size());
      path.push_back(vertex);
    }
  }

  DncBestResponse result;
  result.path = dnc::PathStrategy{path};
  result.delay = f[game.sink][b].value;
  if (dnc::path_delay_against(game, others, result.path) != result.delay) {
    throw DomainError("best-response reconstruction changed the delay value");
  }
  return result;
}

std::optional<DncBestResponse> best_response_dnc(const dnc::DncGame& game,
                                                 const dnc::Profile& profile, int player) {
  dnc::LoadMap others = dnc::loads(game, profile);
  for (int e : dnc::path_edges(game, profile.strategies.at(player))) --others[e];
  return best_response_dnc(game, others);
}

GmgBestResponse best_response_gmg(const gmg::GmgLayout& layout,
                                  const std::vector<int>& opponent_loads, int level) {
  const int n = layout.resource_count();
  const int k = layout.lines;
  if (level < 1) throw DomainError("capability level must be positive");
  if (n == 0) {
    return GmgBestResponse{gmg::IntervalStrategy{}, Rational(0)};
  }

  // Marginal payoff of covering resource t, and per-line prefix sums.
  std::vector<std::vector<Rational>> prefix(n + 1, std::vector<Rational>(k, Rational(0)));
  for (int t = 0; t < n; ++t) {
    prefix[t + 1] = prefix[t];
    prefix[t + 1][layout.resources[t].line] += layout.payoff_at(t, opponent_loads[t] + 1);
  }

  const int max_seg = std::min(level, n);
  // best[t][j]: max payoff on the first t resources using exactly j segments.
  std::vector<std::vector<std::optional<Rational>>> best(
      n + 1, std::vector<std::optional<Rational>>(max_seg + 1));
  std::vector<std::vector<std::pair<int, int>>> choice(
      n + 1, std::vector<std::pair<int, int>>(max_seg + 1, {-1, -1}));
  best[0][0] = Rational(0);
  for (int j = 1; j <= max_seg; ++j) {
    for (int t = j; t <= n; ++t) {
      for (int prev = j - 1; prev < t; ++prev) {
        if (!best[prev][j - 1]) continue;
        for (int line = 0; line < k; ++line) {
          Rational value = *best[prev][j - 1] + prefix[t][line] - prefix[prev][line];
          if (!best[t][j] || value > *best[t][j]) {
            best[t][j] = value;
            choice[t][j] = {prev, line};
          }
        }
      }
    }
  }

  int best_j = 1;
  for (int j = 2; j <= max_seg; ++j) {
    if (*best[n][j] > *best[n][best_j]) best_j = j;
  }

  gmg::IntervalStrategy strategy = gmg::constant_strategy(n, 0);
  int t = n, j = best_j;
  while (j > 0) {
    auto [prev, line] = choice[t][j];
    for (int i = prev; i < t; ++i) strategy.line[i] = line;
    t = prev;
    --j;
  }
  return GmgBestResponse{std::move(strategy), *best[n][best_j]};
}

GmgBestResponse best_response_gmg(const gmg::GmgLayout& layout, const gmg::GmgProfile& profile,
                                  int player, int level) {
  std::vector<int> others = gmg::loads(layout, profile);
  const gmg::IntervalStrategy& mine = profile.strategies.at(player);
  for (int t = 0; t < layout.resource_count(); ++t) {
    if (mine.line[t] == layout.resources[t].line) --others[t];
  }
  return best_response_gmg(layout, others, level);
}

}  // namespace capgames::solve
