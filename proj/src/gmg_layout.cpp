#include "capgames/gmg/layout.hpp"

#include <algorithm>

#include "capgames/errors.hpp"

namespace capgames::gmg {

const Rational& GmgLayout::payoff_at(int resource, int load) const {
  const Resource& r = resources.at(resource);
  const auto& table = r.kind == ResourceKind::Gold ? gold_payoff : mine_payoff;
  return table.at(static_cast<size_t>(load) - 1);
}

GmgLayout finalize_layout(GmgLayout layout) {
  std::sort(layout.resources.begin(), layout.resources.end(),
            [](const Resource& a, const Resource& b) { return a.x < b.x; });
  for (size_t i = 1; i < layout.resources.size(); ++i) {
    if (layout.resources[i].x == layout.resources[i - 1].x) {
      throw DomainError("resources must have distinct x-coordinates");
    }
  }
  return layout;
}

dnc::ValidationReport validate_layout(const GmgLayout& layout) {
  using dnc::IssueCode;
  dnc::ValidationReport report;
  if (layout.lines < 1) report.issues.push_back({IssueCode::BadParameter, "K must be positive"});
  if (layout.players < 1) {
    report.issues.push_back({IssueCode::BadParameter, "player count must be positive"});
  }
  if (layout.bound < 1) {
    report.issues.push_back({IssueCode::BadParameter, "capability level must be positive"});
  }
  if (static_cast<int>(layout.gold_payoff.size()) < layout.players ||
      static_cast<int>(layout.mine_payoff.size()) < layout.players) {
    report.issues.push_back({IssueCode::TableTooShort, "payoff tables shorter than player count"});
  }
  for (int i = 0; i < std::min<int>(layout.players, layout.gold_payoff.size()); ++i) {
    if (!(layout.gold_payoff[i] > 0)) {
      report.issues.push_back({IssueCode::BadParameter, "gold payoff must be positive"});
      break;
    }
  }
  for (int i = 0; i < std::min<int>(layout.players, layout.mine_payoff.size()); ++i) {
    if (!(layout.mine_payoff[i] < 0)) {
      report.issues.push_back({IssueCode::BadParameter, "mine payoff must be negative"});
      break;
    }
  }
  for (size_t i = 0; i < layout.resources.size(); ++i) {
    const Resource& r = layout.resources[i];
    if (r.line < 0 || r.line >= layout.lines) {
      report.issues.push_back({IssueCode::BadParameter, "resource line out of range"});
    }
    if (i > 0 && !(layout.resources[i - 1].x < r.x)) {
      report.issues.push_back(
          {IssueCode::BadParameter, "resource x-coordinates must be distinct and sorted"});
    }
  }
  return report;
}

void require_valid(const GmgLayout& layout) {
  auto report = validate_layout(layout);
  if (!report.ok()) throw DomainError("invalid layout:\n" + report.to_string());
}

int IntervalStrategy::segments() const {
  if (line.empty()) return 0;
  int changes = 0;
  for (size_t i = 1; i < line.size(); ++i) changes += line[i] != line[i - 1];
  return changes + 1;
}

IntervalStrategy constant_strategy(int resource_count, int line) {
  return IntervalStrategy{std::vector<int>(static_cast<size_t>(resource_count), line)};
}

std::vector<std::pair<int, int>> line1_intervals(const IntervalStrategy& strategy) {
  std::vector<std::pair<int, int>> intervals;
  int n = static_cast<int>(strategy.line.size());
  int i = 0;
  while (i < n) {
    if (strategy.line[i] == 1) {
      int j = i;
      while (j + 1 < n && strategy.line[j + 1] == 1) ++j;
      intervals.emplace_back(i, j);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return intervals;
}

IntervalStrategy strategy_from_intervals(int resource_count,
                                         const std::vector<std::pair<int, int>>& intervals) {
  IntervalStrategy s = constant_strategy(resource_count, 0);
  for (auto [a, b] : intervals) {
    if (a < 0 || b >= resource_count || a > b) throw DomainError("interval out of range");
    for (int t = a; t <= b; ++t) s.line[t] = 1;
  }
  return s;
}

void require_valid_strategy(const GmgLayout& layout, const IntervalStrategy& strategy) {
  if (static_cast<int>(strategy.line.size()) != layout.resource_count()) {
    throw DomainError("strategy length does not match resource count");
  }
  for (int l : strategy.line) {
    if (l < 0 || l >= layout.lines) throw DomainError("strategy uses a line out of range");
  }
  if (strategy.segments() > layout.bound) {
    throw DomainError("strategy uses more segments than the capability level allows");
  }
}

void require_valid_profile(const GmgLayout& layout, const GmgProfile& profile) {
  if (static_cast<int>(profile.strategies.size()) != layout.players) {
    throw DomainError("profile size does not match player count");
  }
  for (const auto& s : profile.strategies) require_valid_strategy(layout, s);
}

std::vector<int> loads(const GmgLayout& layout, const GmgProfile& profile) {
  std::vector<int> x(layout.resource_count(), 0);
  for (const IntervalStrategy& s : profile.strategies) {
    for (int t = 0; t < layout.resource_count(); ++t) {
      if (s.line[t] == layout.resources[t].line) ++x[t];
    }
  }
  return x;
}

Rational payoff(const GmgLayout& layout, const GmgProfile& profile, int player) {
  std::vector<int> x = loads(layout, profile);
  const IntervalStrategy& s = profile.strategies.at(player);
  Rational total = 0;
  for (int t = 0; t < layout.resource_count(); ++t) {
    if (s.line[t] == layout.resources[t].line) total += layout.payoff_at(t, x[t]);
  }
  return total;
}

Rational social_welfare(const GmgLayout& layout, const GmgProfile& profile) {
  Rational total = 0;
  for (int i = 0; i < layout.players; ++i) total += payoff(layout, profile, i);
  return total;
}

Rational potential(const GmgLayout& layout, const GmgProfile& profile) {
  std::vector<int> x = loads(layout, profile);
  Rational total = 0;
  for (int t = 0; t < layout.resource_count(); ++t) {
    for (int i = 1; i <= x[t]; ++i) total += layout.payoff_at(t, i);
  }
  return total;
}

Rational gold_welfare(const GmgLayout& layout, int load) {
  if (load < 1 || load > layout.players) throw DomainError("load outside 1..n");
  return Rational(load) * layout.gold_payoff.at(static_cast<size_t>(load) - 1);
}

CoverageStats coverage(const GmgLayout& layout, const IntervalStrategy& strategy,
                       const IntervalStrategy* opponent) {
  CoverageStats stats;
  for (int t = 0; t < layout.resource_count(); ++t) {
    if (strategy.line[t] != layout.resources[t].line) continue;
    if (layout.resources[t].kind == ResourceKind::Gold) {
      ++stats.gold;
      if (opponent && opponent->line[t] == layout.resources[t].line) ++stats.shared_gold;
    } else {
      ++stats.mines;
    }
  }
  return stats;
}

std::vector<IntervalStrategy> enumerate_strategies(const GmgLayout& layout, int level,
                                                   std::uint64_t budget) {
  const int n = layout.resource_count();
  const int k = layout.lines;
  if (n == 0) return {IntervalStrategy{}};
  BigInt count = strategy_count(n, k, level);
  if (count > budget) {
    throw BudgetExceeded("strategy enumeration budget exceeded", budget, count.str());
  }
  std::vector<IntervalStrategy> result;
  result.reserve(static_cast<size_t>(count));
  IntervalStrategy current = constant_strategy(n, 0);
  // DFS in lexicographic order over the line sequence, pruning on the
  // remaining change budget.
  auto rec = [&](auto&& self, int pos, int changes) -> void {
    if (pos == n) {
      result.push_back(current);
      return;
    }
    for (int l = 0; l < k; ++l) {
      int next = changes + (pos > 0 && l != current.line[pos - 1] ? 1 : 0);
      if (next > level - 1) continue;
      current.line[pos] = l;
      self(self, pos + 1, next);
    }
  };
  rec(rec, 0, 0);
  return result;
}

BigInt strategy_count(int resource_count, int lines, int level) {
  if (resource_count == 0) return 1;
  BigInt total = 0;
  BigInt binom = 1;  // C(resource_count-1, j)
  BigInt power = 1;  // (lines-1)^j
  for (int j = 0; j <= std::min(level - 1, resource_count - 1); ++j) {
    if (j > 0) {
      binom = binom * (resource_count - j) / j;
      power *= lines - 1;
    }
    total += binom * lines * power;
  }
  return total;
}

}  // namespace capgames::gmg
