#include "capgames/solve/enumerate_pnes.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "capgames/errors.hpp"

namespace capgames::solve {

namespace {

// Incremental profile evaluator over one value type (exact int64 when the
// view's fast tables are enabled, Rational otherwise).
template <typename Value>
struct Evaluator {
  const FiniteGameView& view;
  const std::vector<std::vector<Value>>& tables;
  std::vector<int> loads;

  Evaluator(const FiniteGameView& v, const std::vector<std::vector<Value>>& t)
      : view(v), tables(t), loads(v.resources, 0) {}

  void push(int s) {
    for (std::int32_t r : view.strategies[s]) ++loads[r];
  }
  void pop(int s) {
    for (std::int32_t r : view.strategies[s]) --loads[r];
  }

  // Utility of a player currently on `s` (loads include that player).
  Value on_strategy(int s) const {
    Value total{};
    for (std::int32_t r : view.strategies[s]) total += tables[r][loads[r] - 1];
    return total;
  }

  // Utility after a unilateral move from `cur` to `alt`.
  Value after_move(int cur, int alt) const {
    const auto& c = view.strategies[cur];
    const auto& a = view.strategies[alt];
    Value total{};
    size_t ci = 0;
    for (std::int32_t r : a) {
      while (ci < c.size() && c[ci] < r) ++ci;
      int occupied = loads[r] + 1 - (ci < c.size() && c[ci] == r ? 1 : 0);
      total += tables[r][occupied - 1];
    }
    return total;
  }

  Value welfare(std::span<const int> profile) const {
    Value total{};
    for (int s : profile) total += on_strategy(s);
    return total;
  }
};

template <typename Value>
const std::vector<std::vector<Value>>& select_tables(const FiniteGameView& view);

template <>
const std::vector<std::vector<std::int64_t>>& select_tables<std::int64_t>(
    const FiniteGameView& view) {
  return view.fast_utility;
}

template <>
const std::vector<std::vector<Rational>>& select_tables<Rational>(const FiniteGameView& view) {
  return view.utility;
}

Rational to_exact(const FiniteGameView& view, std::int64_t v) { return view.from_scaled(v); }
Rational to_exact(const FiniteGameView&, const Rational& v) { return v; }

// Returns true when no player improves by a unilateral move. Players on the
// same strategy are interchangeable, so one representative per distinct
// strategy suffices. Checks the worst-off players first; most non-equilibria
// die on the first scan.
template <typename Value>
bool multiset_is_pne(Evaluator<Value>& eval, std::span<const int> profile) {
  const int s_count = eval.view.strategy_count();
  std::array<std::pair<Value, int>, 16> reps_buf;
  int reps = 0;
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i > 0 && profile[i] == profile[i - 1]) continue;
    reps_buf[reps++] = {eval.on_strategy(profile[i]), profile[i]};
  }
  std::sort(reps_buf.begin(), reps_buf.begin() + reps);
  for (int k = 0; k < reps; ++k) {
    const Value& current = reps_buf[k].first;
    int cur = reps_buf[k].second;
    for (int alt = 0; alt < s_count; ++alt) {
      if (alt == cur) continue;
      if (eval.after_move(cur, alt) > current) return false;
    }
  }
  return true;
}

template <typename Value>
struct WorkerResult {
  std::vector<std::vector<int>> profiles;
  std::uint64_t count = 0;
  bool any_pne = false;
  Value bestw{};
  Value worstw{};
  bool any_profile = false;
  Value max_welfare{};
};

// Enumerates all non-decreasing completions of profiles starting with
// `first`, collecting equilibria and (optionally) the welfare maximum.
template <typename Value>
void enumerate_block(const FiniteGameView& view, int first, const EnumerateOptions& options,
                     WorkerResult<Value>& out) {
  Evaluator<Value> eval(view, select_tables<Value>(view));
  const int n = view.players;
  std::vector<int> profile(n);
  profile[0] = first;
  eval.push(first);

  auto leaf = [&](std::span<const int> full) {
    Value welfare = eval.welfare(full);
    if (options.centralized) {
      if (!out.any_profile || welfare > out.max_welfare) out.max_welfare = welfare;
      out.any_profile = true;
    }
    if (multiset_is_pne(eval, full)) {
      if (!out.any_pne || welfare > out.bestw) out.bestw = welfare;
      if (!out.any_pne || welfare < out.worstw) out.worstw = welfare;
      out.any_pne = true;
      ++out.count;
      if (out.profiles.size() < options.max_stored) {
        out.profiles.emplace_back(full.begin(), full.end());
      }
    }
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      leaf(profile);
      return;
    }
    for (int s = profile[pos - 1]; s < view.strategy_count(); ++s) {
      profile[pos] = s;
      eval.push(s);
      self(self, pos + 1);
      eval.pop(s);
    }
  };

  if (n == 1) {
    leaf(profile);
  } else {
    rec(rec, 1);
  }
  eval.pop(first);
}

// Symmetric two-player specialization: precompute the payoff matrix
// P[i][j] = utility of playing i against j, then equilibria are the pairs
// hitting the column maxima on both sides.
template <typename Value>
void enumerate_two_player(const FiniteGameView& view, const EnumerateOptions& options,
                          WorkerResult<Value>& out) {
  const int s_count = view.strategy_count();
  Evaluator<Value> eval(view, select_tables<Value>(view));
  std::vector<Value> matrix(static_cast<size_t>(s_count) * s_count);
  for (int i = 0; i < s_count; ++i) {
    eval.push(i);
    for (int j = i; j < s_count; ++j) {
      eval.push(j);
      matrix[static_cast<size_t>(i) * s_count + j] = eval.on_strategy(i);
      matrix[static_cast<size_t>(j) * s_count + i] = eval.on_strategy(j);
      eval.pop(j);
    }
    eval.pop(i);
  }
  std::vector<Value> best_response(s_count);
  for (int j = 0; j < s_count; ++j) {
    Value best = matrix[static_cast<size_t>(0) * s_count + j];
    for (int i = 1; i < s_count; ++i) {
      const Value& v = matrix[static_cast<size_t>(i) * s_count + j];
      if (v > best) best = v;
    }
    best_response[j] = best;
  }
  for (int i = 0; i < s_count; ++i) {
    for (int j = i; j < s_count; ++j) {
      Value welfare = matrix[static_cast<size_t>(i) * s_count + j] +
                      matrix[static_cast<size_t>(j) * s_count + i];
      if (options.centralized) {
        if (!out.any_profile || welfare > out.max_welfare) out.max_welfare = welfare;
        out.any_profile = true;
      }
      if (matrix[static_cast<size_t>(i) * s_count + j] == best_response[j] &&
          matrix[static_cast<size_t>(j) * s_count + i] == best_response[i]) {
        if (!out.any_pne || welfare > out.bestw) out.bestw = welfare;
        if (!out.any_pne || welfare < out.worstw) out.worstw = welfare;
        out.any_pne = true;
        ++out.count;
        if (out.profiles.size() < options.max_stored) out.profiles.push_back({i, j});
      }
    }
  }
}

template <typename Value>
EquilibriumSet run_enumeration(const FiniteGameView& view, const EnumerateOptions& options) {
  const int s_count = view.strategy_count();
  const int n = view.players;

  std::vector<WorkerResult<Value>> results;
  const std::uint64_t matrix_cap = view.fast ? 64'000'000 : 1'000'000;
  if (n == 2 && static_cast<std::uint64_t>(s_count) * s_count <= matrix_cap) {
    results.resize(1);
    enumerate_two_player(view, options, results[0]);
  } else {
    results.resize(s_count);
    int workers = options.workers > 0 ? options.workers
                                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, s_count));
    std::atomic<int> next{0};
    auto body = [&]() {
      while (true) {
        int first = next.fetch_add(1);
        if (first >= s_count) break;
        enumerate_block(view, first, options, results[first]);
      }
    };
    if (workers == 1) {
      body();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) pool.emplace_back(body);
      for (auto& t : pool) t.join();
    }
  }

  // Deterministic merge in leading-strategy order.
  EquilibriumSet set;
  bool any_pne = false, any_profile = false;
  Value bestw{}, worstw{}, max_welfare{};
  for (auto& r : results) {
    if (r.any_pne) {
      if (!any_pne || r.bestw > bestw) bestw = r.bestw;
      if (!any_pne || r.worstw < worstw) worstw = r.worstw;
      any_pne = true;
      set.count += r.count;
      for (auto& p : r.profiles) {
        if (set.profiles.size() >= options.max_stored) break;
        set.profiles.push_back(std::move(p));
      }
    }
    if (r.any_profile) {
      if (!any_profile || r.max_welfare > max_welfare) max_welfare = r.max_welfare;
      any_profile = true;
    }
  }
  if (any_pne) {
    set.bestw = to_exact(view, bestw);
    set.worstw = to_exact(view, worstw);
  }
  if (options.centralized && any_profile) set.centralized = to_exact(view, max_welfare);
  return set;
}

}  // namespace

std::uint64_t default_profile_budget() {
  if (const char* env = std::getenv("CAPGAMES_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000'000ULL;
}

BigInt multiset_count(int strategies, int players) {
  BigInt count = 1;
  for (int i = 1; i <= players; ++i) {
    count = count * (strategies + i - 1) / i;
  }
  return count;
}

std::optional<ViewDeviation> find_improving_deviation(const FiniteGameView& view,
                                                      std::span<const int> profile) {
  Evaluator<Rational> eval(view, view.utility);
  for (int s : profile) eval.push(s);
  for (size_t i = 0; i < profile.size(); ++i) {
    Rational current = eval.on_strategy(profile[i]);
    for (int alt = 0; alt < view.strategy_count(); ++alt) {
      if (alt == profile[i]) continue;
      Rational moved = eval.after_move(profile[i], alt);
      if (moved > current) {
        return ViewDeviation{static_cast<int>(i), alt, current, moved};
      }
    }
  }
  return std::nullopt;
}

bool is_pne(const FiniteGameView& view, std::span<const int> profile) {
  return !find_improving_deviation(view, profile).has_value();
}

EquilibriumSet enumerate_pnes(const FiniteGameView& view, const EnumerateOptions& options) {
  if (view.strategy_count() == 0) {
    throw DomainError("the strategy space is empty");
  }
  if (view.players > 16) {
    throw DomainError("profile enumeration supports at most 16 players");
  }
  EnumerateOptions opts = options;
  if (opts.budget == 0) opts.budget = default_profile_budget();
  BigInt size = multiset_count(view.strategy_count(), view.players);
  if (size > opts.budget) {
    throw BudgetExceeded("profile enumeration budget exceeded", opts.budget, size.str());
  }
  if (view.fast) return run_enumeration<std::int64_t>(view, opts);
  return run_enumeration<Rational>(view, opts);
}

}  // namespace capgames::solve
