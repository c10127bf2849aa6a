#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "capgames/dnc/game.hpp"

namespace capgames::gen {

/// Quadratic threshold game: n players, pair resources r_ij for unordered
/// player pairs and one self resource r_i per player. Player i plays either
/// S_in (all r_ij) or S_out ({r_i}).
struct ThresholdGame {
  int n = 2;
  std::map<std::pair<int, int>, dnc::DelayTable> pair_delay;  // key (i<j)
  std::vector<dnc::DelayTable> self_delay;                    // r_1..r_n

  const dnc::DelayTable& pair_table(int i, int j) const;
};

ThresholdGame uniform_threshold_game(int n, const dnc::DelayTable& pair_table,
                                     const dnc::DelayTable& self_table);

/// The DNC image of a threshold game: a triangular grid with split resource
/// vertices, per-player jump edges of weight w_i = i(i-2)+2n+1, gate delays
/// built from R = (sum of resource maxima) + 1, and bound b = n^2+3.
struct ThresholdDnc {
  dnc::DncGame game;
  int n = 0;
  int bound = 0;
  Rational gate_constant;  // R
  std::vector<int> jump_weight;
  // Resource key ("rII_JJ" or "rII") -> endpoints of its delay-carrying edge.
  std::map<std::string, std::pair<std::string, std::string>> resource_ids;
  std::vector<dnc::PathStrategy> in_path;   // per player: the grid route
  std::vector<dnc::PathStrategy> out_path;  // per player: the jump route
};

ThresholdDnc threshold_to_dnc(const ThresholdGame& tg);

}  // namespace capgames::gen
