#pragma once

#include <string>

#include "capgames/dnc/game.hpp"

namespace capgames::dnc {

/// Instance schema:
/// { "variant": "dnc"|"dncda"|"dncdas", "vertices": [...],
///   "edges": [{"from","to","weight","delay":["p/q",...]}],
///   "source", "sink", "bound", "players" }
std::string game_to_json(const DncGame& game);

/// Parses the schema above. Throws std::invalid_argument on malformed JSON
/// or schema violations; performs no game-rule validation.
DncGame game_from_json(const std::string& text);

DncGame load_game_file(const std::string& path);
void save_game_file(const DncGame& game, const std::string& path);

}  // namespace capgames::dnc
