#pragma once

#include <string>

#include "capgames/gmg/layout.hpp"

namespace capgames::gmg {

/// Layout schema:
/// { "K", "players", "bound", "gold_payoff": [...], "mine_payoff": [...],
///   "resources": [{"x":"p/q","line","kind"}] }
std::string layout_to_json(const GmgLayout& layout);
GmgLayout layout_from_json(const std::string& text);

GmgLayout load_layout_file(const std::string& path);
void save_layout_file(const GmgLayout& layout, const std::string& path);

}  // namespace capgames::gmg
