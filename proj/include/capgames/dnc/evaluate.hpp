#pragma once

#include <optional>
#include <vector>

#include "capgames/dnc/game.hpp"

namespace capgames::dnc {

/// Load per edge index.
using LoadMap = std::vector<int>;

/// Edge indices along a path. Throws DomainError when consecutive vertices
/// are not connected.
std::vector<int> path_edges(const DncGame& game, const PathStrategy& path);

int path_weight(const DncGame& game, const PathStrategy& path);

/// Throws DomainError unless the path is a simple s-t path within the bound.
void require_valid_strategy(const DncGame& game, const PathStrategy& path);
void require_valid_profile(const DncGame& game, const Profile& profile);

LoadMap loads(const DncGame& game, const Profile& profile);

/// c_i = sum of d_e(x_e) over the player's edges, at the profile's loads.
Rational player_delay(const DncGame& game, const Profile& profile, int player);

/// Delay of `path` when the loads of the other players are `others`;
/// the player itself adds one to each edge it uses.
Rational path_delay_against(const DncGame& game, const LoadMap& others, const PathStrategy& path);

/// W = -sum of player delays.
Rational social_welfare(const DncGame& game, const Profile& profile);

/// Rosenthal potential: sum over edges of d_e(1) + ... + d_e(x_e).
Rational rosenthal_potential(const DncGame& game, const Profile& profile);

struct Deviation {
  int player = -1;
  PathStrategy strategy;
  Rational old_delay;
  Rational new_delay;
};

struct PneCheck {
  bool is_pne = false;
  std::optional<Deviation> witness;  // an improving deviation when not a PNE
};

/// Exhaustive-deviation equilibrium check: every player's delay must equal
/// their best-response delay over the full strategy space.
PneCheck is_pne(const DncGame& game, const Profile& profile);

}  // namespace capgames::dnc
