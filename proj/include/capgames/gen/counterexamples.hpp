#pragma once

#include "capgames/dnc/game.hpp"

namespace capgames::gen {

/// A generated DncDaS counterexample with the welfare values the
/// construction is designed to realize.
struct DncDaSCex {
  dnc::DncGame game;
  int first_jump = 0;  // v
  int n1 = 0;
  int n2 = 0;
  Rational w1;  // welfare shared by every level-1 equilibrium
  Rational w2;  // welfare of the constructed level-2 equilibrium
};

/// Two parallel chains plus one crossing edge; with d(v) > 0 at the first
/// jump of the table the level-2 crossing equilibrium is strictly worse
/// than every level-1 equilibrium. Constant tables have no counterexample
/// and raise DomainError.
DncDaSCex cex_pp_positive(const dnc::DelayTable& delay);

/// The d(v) = 0 variant: 2v players, an upper shortcut chain shared by both
/// crossing strategies. Requires the table to be defined up to load 2v.
DncDaSCex cex_pp_zero(const dnc::DelayTable& delay);

/// Four-vertex gadget with a one-unit default route and a two-unit shortcut;
/// v players experience a strictly better equilibrium at level 2. Zero
/// tables raise DomainError.
DncDaSCex cex_ap(const dnc::DelayTable& delay);

}  // namespace capgames::gen
