#pragma once

#include "capgames/gmg/layout.hpp"

namespace capgames::aog {

/// Normalized alternating-ordering parameters: r_g(1) = 1, r_g(2) = rho,
/// r_m = mu at both loads. Valid when 0 < rho < 1/2 and mu < 0.
struct AogParams {
  int m = 1;  // M: mines per line; each line has M+1 gold
  Rational rho;
  Rational mu;

  /// All equilibria share one welfare exactly on this open region.
  bool interior() const { return Rational(-2) + rho < mu && mu < -rho; }
};

void require_valid(const AogParams& params);

/// 4M+2 resources at x = t, alternating gold/gold/mine/mine over the two
/// lines, ending with a final gold pair. Two players, bound 4M+2.
gmg::GmgLayout build_layout(const AogParams& params);

/// Common welfare of every equilibrium at level b (interior parameters
/// required): linear in b up to 2M+1, then the saturated all-gold value.
Rational w_eq_closed_form(const AogParams& params, int level);

/// Best centralized welfare: 2M+2 + mu * max(2M+1-b, 0).
Rational w_best_closed_form(const AogParams& params, int level);

/// W_best / W_eq, exact. Requires interior parameters and positive
/// equilibrium welfare.
Rational poa(const AogParams& params, int level);

/// The four structural forms an optimal strategy can take, with the gold
/// and mine counts each form pins down.
enum class FormClass { S1, S2, S3, S4, None };

std::string form_name(FormClass cls);

struct FormInfo {
  FormClass cls = FormClass::None;
  int gold = 0;
  int mines = 0;
};

/// Checks the interval endpoints of a two-line strategy over t = 0..4M+1
/// against the structural endpoint rules (starts at 0 or 4j+3, ends at
/// 4M+1 or 4j) and returns the matching class with its coverage counts.
FormInfo classify_form(const gmg::IntervalStrategy& strategy, int m);

/// Line and kind of position t in the alternating layout.
int layout_line(int t, int m);
bool layout_is_gold(int t, int m);

/// Two level-2 equilibria with different welfare, which exist exactly when
/// the parameters leave the interior region; M is chosen from the region's
/// size bound. Interior parameters raise DomainError.
struct WitnessPair {
  int m = 0;
  gmg::GmgProfile first;
  gmg::GmgProfile second;
};

WitnessPair necessary_condition_witnesses(const Rational& rho, const Rational& mu);

}  // namespace capgames::aog
