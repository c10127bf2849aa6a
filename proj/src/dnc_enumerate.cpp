#include "capgames/dnc/enumerate.hpp"

#include <algorithm>

#include "capgames/errors.hpp"

namespace capgames::dnc {

namespace {

struct Dfs {
  const DncGame& game;
  int bound;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<bool> on_path;
  std::vector<int> stack;
  std::vector<PathStrategy>* sink_paths;  // null when only tracking max weight
  int max_weight = -1;

  Dfs(const DncGame& g, int b, std::uint64_t budget, std::vector<PathStrategy>* out)
      : game(g), bound(b), budget(budget), on_path(g.vertex_count(), false), sink_paths(out) {}

  void run() {
    stack.push_back(game.source);
    on_path[game.source] = true;
    walk(game.source, 0);
  }

  void walk(int v, int used) {
    if (++visited > budget) {
      throw BudgetExceeded("path enumeration budget exceeded", budget, "unknown");
    }
    if (v == game.sink) {
      if (sink_paths) sink_paths->push_back(PathStrategy{stack});
      max_weight = std::max(max_weight, used);
      return;  // simple s-t paths end at the sink
    }
    // out_edges are sorted by target id, so paths come out lexicographically.
    for (int e : game.out_edges[v]) {
      const Edge& edge = game.edges[e];
      if (on_path[edge.to]) continue;
      int next = used + edge.weight;
      if (next > bound) continue;
      on_path[edge.to] = true;
      stack.push_back(edge.to);
      walk(edge.to, next);
      stack.pop_back();
      on_path[edge.to] = false;
    }
  }
};

}  // namespace

std::vector<PathStrategy> enumerate_strategies(const DncGame& game, int bound,
                                               std::uint64_t budget) {
  std::vector<PathStrategy> result;
  if (game.source < 0 || game.sink < 0) return result;
  Dfs dfs(game, bound, budget, &result);
  dfs.run();
  return result;
}

std::vector<PathStrategy> enumerate_strategies(const DncGame& game) {
  return enumerate_strategies(game, game.bound);
}

int longest_simple_st_path_weight(const DncGame& game, std::uint64_t budget) {
  // Unbounded in weight; every simple path has at most |V|-1 edges.
  Dfs dfs(game, game.vertex_count(), budget, nullptr);
  dfs.run();
  if (dfs.max_weight < 0) throw DomainError("no s-t path exists");
  return dfs.max_weight;
}

}  // namespace capgames::dnc
