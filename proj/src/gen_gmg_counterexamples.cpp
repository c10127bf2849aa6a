#include "capgames/gen/gmg_counterexamples.hpp"

#include <algorithm>

#include "capgames/errors.hpp"

namespace capgames::gen {

namespace {

using gmg::GmgLayout;
using gmg::Resource;
using gmg::ResourceKind;

int first_jump(const std::vector<Rational>& table) {
  for (size_t x = 1; x < table.size(); ++x) {
    if (table[x] != table[x - 1]) return static_cast<int>(x);
  }
  return 0;
}

BigInt floor_rational(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  if (value < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

GmgLayout base_layout(ResourceKind kind, const std::vector<Rational>& table, int players) {
  GmgLayout layout;
  layout.lines = 2;
  layout.players = players;
  layout.bound = 2;
  if (kind == ResourceKind::Gold) {
    layout.gold_payoff = table;
    layout.mine_payoff.assign(players, Rational(-1));
  } else {
    layout.mine_payoff = table;
    layout.gold_payoff.assign(players, Rational(1));
  }
  return layout;
}

void append_resources(GmgLayout& layout, const std::vector<int>& lines, ResourceKind kind) {
  int base = layout.resource_count();
  for (size_t i = 0; i < lines.size(); ++i) {
    layout.resources.push_back(Resource{Rational(base + static_cast<int>(i) + 1), lines[i], kind});
  }
}

// Centrosymmetric flip: reversed order, lines swapped.
std::vector<int> flipped(const std::vector<int>& lines) {
  std::vector<int> out(lines.rbegin(), lines.rend());
  for (int& l : out) l = 1 - l;
  return out;
}

struct SqueezeBlock {
  std::vector<int> lines;
  int n0 = 0;
  int n1 = 0;
  Rational d_final;
};

// Greedy block construction. D(t) = weight0 * N0(t) - N1(t). Phase one runs
// until the monitored line count reaches the cap; phase two extends line 0
// until D exceeds the exit level. Postconditions: all prefixes and suffixes
// strictly positive, D(N) < 3, and the monitored count at or above its cap
// (strictly above when phase two extends it).
SqueezeBlock build_squeeze(const Rational& weight0, const Rational& cap, bool monitor_line0,
                           const Rational& exit_level) {
  SqueezeBlock block;
  Rational d = 0;
  Rational d_max_prefix = 0;
  auto put = [&](int line) {
    block.lines.push_back(line);
    if (line == 0) {
      ++block.n0;
      d += weight0;
    } else {
      ++block.n1;
      d -= 1;
    }
    if (!(d > 0)) throw DomainError("squeeze construction violated the prefix property");
  };
  while (Rational(monitor_line0 ? block.n0 : block.n1) < cap) {
    if (d <= 1) {
      put(0);
    } else {
      put(1);
    }
    d_max_prefix = std::max(d_max_prefix, d);
  }
  while (d <= exit_level) {
    put(0);
  }
  block.d_final = d;
  if (!(d < 3)) throw DomainError("squeeze construction violated D(N) < 3");
  // All suffixes better: D(N) must strictly exceed every interim prefix value.
  if (!(d > d_max_prefix)) {
    throw DomainError("squeeze construction violated the suffix property");
  }
  return block;
}

}  // namespace

GmgCex gmg_cex_pp(ResourceKind kind, const std::vector<Rational>& table) {
  const int v = first_jump(table);
  if (v == 0) {
    throw DomainError("PP holds universally: the payoff function is constant");
  }
  const int players = v + 1;
  if (static_cast<int>(table.size()) < players) {
    throw DomainError("payoff table must be defined up to load v+1");
  }
  const Rational lo = table[v - 1];   // value at load v
  const Rational hi = table[v];       // value at load v+1
  const Rational ratio = hi / lo;     // positive for gold/gold and mine/mine

  GmgCex out;
  out.first_jump = v;
  out.layout = base_layout(kind, table, players);

  if (kind == ResourceKind::Gold && ratio < 1) {
    out.kind = GmgCexCase::GoldSqueeze;
    Rational cap = Rational(3) / (1 - ratio);
    SqueezeBlock block = build_squeeze(ratio, cap, true, 1 + ratio);
    if (!(Rational(block.n0) > cap)) {
      throw DomainError("squeeze construction violated the line-0 count bound");
    }
    append_resources(out.layout, block.lines, kind);
    append_resources(out.layout, flipped(block.lines), kind);
    out.w1 = Rational(players) * Rational(block.n0 + block.n1) * lo;
    out.w2 = Rational(players) * Rational(2 * block.n0) * hi;
  } else if (kind == ResourceKind::Gold) {
    out.kind = GmgCexCase::GoldStuck;
    int n = static_cast<int>(floor_rational(ratio / (ratio - 1))) + 1;
    std::vector<int> lines;
    lines.insert(lines.end(), n, 0);
    lines.insert(lines.end(), n, 1);
    lines.insert(lines.end(), n + 1, 0);
    append_resources(out.layout, lines, kind);
    out.w1 = Rational(players) * Rational(2 * n + 1) * hi;
    out.w2 = Rational(players) * Rational(2 * n) * hi;
  } else if (ratio < 1) {
    out.kind = GmgCexCase::MineStuck;
    int n = static_cast<int>(floor_rational(ratio / (1 - ratio))) + 1;
    std::vector<int> lines;
    lines.insert(lines.end(), n, 0);
    lines.insert(lines.end(), n, 1);
    lines.insert(lines.end(), n + 1, 0);
    append_resources(out.layout, lines, kind);
    out.w1 = Rational(players) * Rational(n) * hi;
    out.w2 = Rational(players) * Rational(n + 1) * hi;
  } else {
    out.kind = GmgCexCase::MineSqueeze;
    Rational inv = 1 / ratio;
    Rational cap = Rational(3) / (1 - inv);  // = 3 ratio / (ratio - 1)
    SqueezeBlock block = build_squeeze(inv, cap, false, 1 + inv);
    if (!(Rational(block.n1) >= cap)) {
      throw DomainError("squeeze construction violated the line-1 count bound");
    }
    append_resources(out.layout, block.lines, kind);
    append_resources(out.layout, flipped(block.lines), kind);
    out.w1 = Rational(players) * Rational(block.n0 + block.n1) * lo;
    out.w2 = Rational(players) * Rational(2 * block.n1) * hi;
  }
  out.layout = gmg::finalize_layout(std::move(out.layout));
  gmg::require_valid(out.layout);
  return out;
}

GmgBwrCex gmg_cex_bwr(const std::vector<Rational>& gold_table, int players) {
  if (static_cast<int>(gold_table.size()) < players) {
    throw DomainError("gold table must be defined up to the player count");
  }
  int peak = 1;
  Rational best = gold_table[0];
  for (int x = 2; x <= players; ++x) {
    Rational w = Rational(x) * gold_table[x - 1];
    if (w > best) {
      best = w;
      peak = x;
    }
  }
  if (peak == players) {
    throw DomainError("BWR holds: the gold welfare function peaks at full load");
  }

  GmgBwrCex out;
  out.peak_load = peak;
  out.w_peak = Rational(players) * best;
  out.w_full = Rational(players) * Rational(players) * gold_table[players - 1];

  GmgLayout layout;
  layout.lines = players;
  layout.players = players;
  layout.bound = players;  // maximal capability: any assignment realizable
  layout.gold_payoff = gold_table;
  layout.mine_payoff.assign(players, Rational(-1));
  for (int i = 0; i < players; ++i) {
    layout.resources.push_back(Resource{Rational(i + 1), i, ResourceKind::Gold});
  }
  out.layout = gmg::finalize_layout(std::move(layout));
  gmg::require_valid(out.layout);
  return out;
}

gmg::GmgProfile bwr_ring_profile(const GmgBwrCex& cex) {
  const int n = cex.layout.players;
  const int width = cex.peak_load;
  gmg::GmgProfile profile;
  for (int i = 0; i < n; ++i) {
    gmg::IntervalStrategy s = gmg::constant_strategy(n, 0);
    auto covered = [&](int t) {
      int offset = (t - i + n) % n;
      return offset < width;
    };
    // Covered gold get their own line; gaps extend the nearest covered line
    // so the assignment stays within `width` segments.
    int current = -1;
    for (int t = 0; t < n; ++t) {
      if (covered(t)) {
        current = t;
      } else if (current == -1) {
        current = i % n;  // before the first covered position
      }
      s.line[t] = covered(t) ? t : current;
    }
    // A gap position must not accidentally sit on its own gold.
    for (int t = 0; t < n; ++t) {
      if (!covered(t) && s.line[t] == t) {
        throw DomainError("ring profile construction failed");
      }
    }
    profile.strategies.push_back(std::move(s));
  }
  return profile;
}

GmgBfrCex gmg_cex_bfr(const std::vector<Rational>& gold_table) {
  if (gold_table.empty()) throw DomainError("gold table must be nonempty");
  const int players = static_cast<int>(gold_table.size());
  Rational r_min = gold_table[0], r_max = gold_table[0];
  for (const Rational& v : gold_table) {
    r_min = std::min(r_min, v);
    r_max = std::max(r_max, v);
  }
  GmgBfrCex out;
  out.n_gold = static_cast<int>(floor_rational(r_max / r_min)) + 1;

  GmgLayout layout;
  layout.lines = 2;
  layout.players = players;
  layout.bound = 2;
  layout.gold_payoff = gold_table;
  layout.mine_payoff.assign(players, Rational(-1));
  for (int i = 0; i < out.n_gold; ++i) {
    layout.resources.push_back(Resource{Rational(i + 1), 0, ResourceKind::Gold});
  }
  layout.resources.push_back(Resource{Rational(out.n_gold + 1), 1, ResourceKind::Gold});
  out.layout = gmg::finalize_layout(std::move(layout));
  gmg::require_valid(out.layout);

  out.w1 = Rational(players) * Rational(out.n_gold) * gold_table[players - 1];
  out.w2 = Rational(players) * Rational(out.n_gold + 1) * gold_table[players - 1];
  return out;
}

}  // namespace capgames::gen
