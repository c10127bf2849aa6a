#pragma once

#include "capgames/gmg/layout.hpp"

namespace capgames::gen {

enum class GmgCexCase {
  GoldSqueeze,  // r_g ratio < 1
  GoldStuck,    // r_g ratio > 1
  MineStuck,    // r_m ratio < 1
  MineSqueeze,  // r_m ratio > 1
};

struct GmgCex {
  gmg::GmgLayout layout;
  GmgCexCase kind;
  int first_jump = 0;  // v
  Rational w1;
  Rational w2;
};

/// A GMG instance with the given gold or mine payoff table whose level-1
/// equilibria strictly beat a level-2 equilibrium. The construction is the
/// squeeze block pair or the stuck layout depending on the direction of the
/// table's first jump; its structural postconditions are asserted after
/// generation. Constant tables raise DomainError.
GmgCex gmg_cex_pp(gmg::ResourceKind kind, const std::vector<Rational>& table);

/// One gold per line on n lines; when w_g(x) = x r_g(x) peaks at some
/// n' < n, the level-n' ring cover beats the unique maximal-capability
/// equilibrium. Raises DomainError when the maximum sits at x = n.
struct GmgBwrCex {
  gmg::GmgLayout layout;
  int peak_load = 0;  // n'
  Rational w_peak;    // n * w_g(n')
  Rational w_full;    // n * w_g(n)
};
GmgBwrCex gmg_cex_bwr(const std::vector<Rational>& gold_table, int players);

/// Ring-cover equilibrium profile for the BWR instance at level n'.
gmg::GmgProfile bwr_ring_profile(const GmgBwrCex& cex);

/// Gold-only two-line instance that always violates BFR: N gold on line 0,
/// one more on line 1, N > r_max/r_min.
struct GmgBfrCex {
  gmg::GmgLayout layout;
  int n_gold = 0;  // N
  Rational w1;     // n N r_g(n)
  Rational w2;     // n (N+1) r_g(n)
};
GmgBfrCex gmg_cex_bfr(const std::vector<Rational>& gold_table);

}  // namespace capgames::gen
