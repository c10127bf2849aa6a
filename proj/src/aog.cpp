#include "capgames/aog/aog.hpp"

#include <algorithm>

#include "capgames/errors.hpp"

namespace capgames::aog {

namespace {

BigInt floor_rational(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  if (value < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

}  // namespace

void require_valid(const AogParams& params) {
  if (params.m < 1) throw DomainError("M must be at least 1");
  if (!(params.rho > 0 && params.rho < Rational(1, 2))) {
    throw DomainError("rho must satisfy 0 < rho < 1/2");
  }
  if (!(params.mu < 0)) throw DomainError("mu must be negative");
}

int layout_line(int t, int m) {
  (void)m;
  // t mod 4: 0 and 2 on line 1, 1 and 3 on line 0; the final pair at
  // t = 4M, 4M+1 follows the same congruence.
  return t % 4 == 0 || t % 4 == 2 ? 1 : 0;
}

bool layout_is_gold(int t, int m) {
  (void)m;
  return t % 4 == 0 || t % 4 == 1;
}

gmg::GmgLayout build_layout(const AogParams& params) {
  require_valid(params);
  gmg::GmgLayout layout;
  layout.lines = 2;
  layout.players = 2;
  layout.bound = 4 * params.m + 2;
  layout.gold_payoff = {Rational(1), params.rho};
  layout.mine_payoff = {params.mu, params.mu};
  for (int t = 0; t < 4 * params.m + 2; ++t) {
    layout.resources.push_back(gmg::Resource{
        Rational(t), layout_line(t, params.m),
        layout_is_gold(t, params.m) ? gmg::ResourceKind::Gold : gmg::ResourceKind::Mine});
  }
  layout = gmg::finalize_layout(std::move(layout));
  gmg::require_valid(layout);
  return layout;
}

Rational w_eq_closed_form(const AogParams& params, int level) {
  require_valid(params);
  if (!params.interior()) {
    throw DomainError("equilibrium welfare closed form requires the interior region");
  }
  if (level < 1) throw DomainError("level must be positive");
  const Rational m(params.m);
  if (level >= 2 * params.m + 2) {
    return (4 * m + 4) * params.rho;
  }
  return (2 * m + 1) * (1 + params.mu) + 2 * (1 - params.rho) +
         (2 * params.rho - params.mu - 1) * level;
}

Rational w_best_closed_form(const AogParams& params, int level) {
  require_valid(params);
  if (level < 1) throw DomainError("level must be positive");
  const int slack = std::max(2 * params.m + 1 - level, 0);
  return Rational(2 * params.m + 2) + params.mu * slack;
}

Rational poa(const AogParams& params, int level) {
  Rational w_eq = w_eq_closed_form(params, level);
  if (!(w_eq > 0)) {
    throw DomainError("POA undefined: equilibrium welfare is not positive");
  }
  return w_best_closed_form(params, level) / w_eq;
}

std::string form_name(FormClass cls) {
  switch (cls) {
    case FormClass::S1: return "S1";
    case FormClass::S2: return "S2";
    case FormClass::S3: return "S3";
    case FormClass::S4: return "S4";
    case FormClass::None: return "none";
  }
  return "?";
}

FormInfo classify_form(const gmg::IntervalStrategy& strategy, int m) {
  const int top = 4 * m + 1;
  if (static_cast<int>(strategy.line.size()) != top + 1) {
    throw DomainError("strategy length does not match the layout");
  }
  auto intervals = gmg::line1_intervals(strategy);

  FormInfo info;
  for (int t = 0; t <= top; ++t) {
    if (strategy.line[t] != layout_line(t, m)) continue;
    if (layout_is_gold(t, m)) {
      ++info.gold;
    } else {
      ++info.mines;
    }
  }

  auto starts_ok = [&](size_t from) {
    for (size_t i = from; i < intervals.size(); ++i) {
      if (intervals[i].first % 4 != 3) return false;
    }
    return true;
  };
  auto ends_ok = [&](size_t until_excl) {
    for (size_t i = 0; i < until_excl; ++i) {
      if (intervals[i].second % 4 != 0) return false;
    }
    return true;
  };

  if (intervals.empty()) {
    info.cls = FormClass::S2;  // c = 0, all constraints vacuous
    return info;
  }
  const bool at_zero = intervals.front().first == 0;
  const bool at_top = intervals.back().second == top;
  if (at_zero && at_top) {
    // S1: interior ends at 4j, interior starts at 4j+3.
    if (ends_ok(intervals.size() - 1) && starts_ok(1)) info.cls = FormClass::S1;
  } else if (!at_zero && !at_top) {
    if (ends_ok(intervals.size()) && starts_ok(0)) info.cls = FormClass::S2;
  } else if (at_zero) {
    if (ends_ok(intervals.size()) && starts_ok(1)) info.cls = FormClass::S3;
  } else {
    if (ends_ok(intervals.size() - 1) && starts_ok(0)) info.cls = FormClass::S4;
  }
  return info;
}

WitnessPair necessary_condition_witnesses(const Rational& rho, const Rational& mu) {
  AogParams probe{1, rho, mu};
  require_valid(probe);
  if (probe.interior()) {
    throw DomainError("no witness exists: interior parameters give equal-welfare equilibria");
  }

  WitnessPair out;
  const Rational one(1);
  if (mu >= -rho) {
    Rational bound = 2 * (rho + mu) / (one - rho) + 1;
    out.m = std::max<int>(1, static_cast<int>(floor_rational(bound)) + 1);
  } else {
    Rational bound = 2 * (-mu - rho) / (one - rho);
    out.m = std::max<int>(1, static_cast<int>(floor_rational(bound)) + 1);
  }
  const int m = out.m;
  const int count = 4 * m + 2;
  const int half = m / 2;

  auto from = [&](std::vector<std::pair<int, int>> iv) {
    return gmg::strategy_from_intervals(count, iv);
  };
  if (mu >= -rho) {
    out.first.strategies = {from({{0, 0}}), from({{0, 4 * m}})};
    out.second.strategies = {from({{0, 4 * half}}), from({{4 * half + 3, 4 * m + 1}})};
  } else {
    out.first.strategies = {from({{4 * m - 1, 4 * m + 1}}), from({{3, 4 * m + 1}})};
    out.second.strategies = {from({{4 * half + 3, 4 * m + 1}}), from({{0, 4 * half}})};
  }
  return out;
}

}  // namespace capgames::aog
