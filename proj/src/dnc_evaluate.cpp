#include "capgames/dnc/evaluate.hpp"

#include <set>

#include "capgames/dnc/enumerate.hpp"
#include "capgames/errors.hpp"

namespace capgames::dnc {

std::vector<int> path_edges(const DncGame& game, const PathStrategy& path) {
  std::vector<int> result;
  result.reserve(path.vertices.empty() ? 0 : path.vertices.size() - 1);
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    int e = game.edge_index(path.vertices[i], path.vertices[i + 1]);
    if (e < 0) {
      throw DomainError("path uses missing edge " + game.id_of(path.vertices[i]) + "->" +
                        game.id_of(path.vertices[i + 1]));
    }
    result.push_back(e);
  }
  return result;
}

int path_weight(const DncGame& game, const PathStrategy& path) {
  int w = 0;
  for (int e : path_edges(game, path)) w += game.edges[e].weight;
  return w;
}

void require_valid_strategy(const DncGame& game, const PathStrategy& path) {
  if (path.vertices.empty() || path.vertices.front() != game.source ||
      path.vertices.back() != game.sink) {
    throw DomainError("strategy must be an s-t path");
  }
  std::set<int> seen(path.vertices.begin(), path.vertices.end());
  if (seen.size() != path.vertices.size()) {
    throw DomainError("strategy path revisits a vertex");
  }
  if (path_weight(game, path) > game.bound) {
    throw DomainError("strategy path exceeds the distance bound");
  }
}

void require_valid_profile(const DncGame& game, const Profile& profile) {
  if (static_cast<int>(profile.strategies.size()) != game.players) {
    throw DomainError("profile size does not match player count");
  }
  for (const PathStrategy& s : profile.strategies) require_valid_strategy(game, s);
}

LoadMap loads(const DncGame& game, const Profile& profile) {
  LoadMap result(game.edge_count(), 0);
  for (const PathStrategy& s : profile.strategies) {
    for (int e : path_edges(game, s)) ++result[e];
  }
  return result;
}

Rational player_delay(const DncGame& game, const Profile& profile, int player) {
  LoadMap x = loads(game, profile);
  Rational total = 0;
  for (int e : path_edges(game, profile.strategies.at(player))) {
    total += game.edges[e].delay.at(x[e]);
  }
  return total;
}

Rational path_delay_against(const DncGame& game, const LoadMap& others, const PathStrategy& path) {
  Rational total = 0;
  for (int e : path_edges(game, path)) {
    total += game.edges[e].delay.at(others[e] + 1);
  }
  return total;
}

Rational social_welfare(const DncGame& game, const Profile& profile) {
  Rational total = 0;
  for (int i = 0; i < game.players; ++i) total += player_delay(game, profile, i);
  return -total;
}

Rational rosenthal_potential(const DncGame& game, const Profile& profile) {
  LoadMap x = loads(game, profile);
  Rational total = 0;
  for (int e = 0; e < game.edge_count(); ++e) {
    for (int i = 1; i <= x[e]; ++i) total += game.edges[e].delay.at(i);
  }
  return total;
}

PneCheck is_pne(const DncGame& game, const Profile& profile) {
  std::vector<PathStrategy> space = enumerate_strategies(game);
  LoadMap all = loads(game, profile);
  for (int i = 0; i < game.players; ++i) {
    LoadMap others = all;
    for (int e : path_edges(game, profile.strategies[i])) --others[e];
    Rational current = path_delay_against(game, others, profile.strategies[i]);
    for (const PathStrategy& alt : space) {
      Rational cand = path_delay_against(game, others, alt);
      if (cand < current) {
        return PneCheck{false, Deviation{i, alt, current, cand}};
      }
    }
  }
  return PneCheck{true, std::nullopt};
}

}  // namespace capgames::dnc
