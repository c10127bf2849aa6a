#include "capgames/props/properties.hpp"

#include "capgames/dnc/enumerate.hpp"
#include "capgames/errors.hpp"
#include "capgames/solve/view.hpp"

namespace capgames::props {

namespace {

template <typename MakeLevelView>
SweepResult run_sweep(int max_capability, const SweepOptions& options, MakeLevelView&& make_view) {
  SweepResult result;
  result.max_capability = max_capability;
  int lo = std::max(1, options.level_min);
  int hi = options.level_max > 0 ? std::min(options.level_max, max_capability) : max_capability;
  result.covers_full_range = lo == 1 && hi == max_capability;

  solve::EnumerateOptions enum_opts;
  enum_opts.budget = options.budget;
  enum_opts.workers = options.workers;
  enum_opts.centralized = options.centralized;
  enum_opts.max_stored = 0;  // the sweep keeps only the aggregates

  for (int level = lo; level <= hi; ++level) {
    SweepLevel row;
    row.level = level;
    try {
      solve::FiniteGameView view = make_view(level);
      solve::EquilibriumSet set = solve::enumerate_pnes(view, enum_opts);
      row.complete = true;
      row.pne_count = set.count;
      row.bestw = set.bestw;
      row.worstw = set.worstw;
      row.centralized = set.centralized;
    } catch (const BudgetExceeded&) {
      row.complete = false;
      result.covers_full_range = false;
    }
    result.levels.push_back(std::move(row));
  }
  return result;
}

const SweepLevel* find_level(const SweepResult& sweep, int level) {
  for (const SweepLevel& row : sweep.levels) {
    if (row.level == level) return &row;
  }
  return nullptr;
}

Verdict pairwise_check(const SweepResult& sweep, bool best_of_higher) {
  // PP compares bestw(b) with worstw(b+1); AP the mirrored direction.
  Verdict verdict;
  bool full = sweep.covers_full_range;
  for (size_t i = 0; i + 1 < sweep.levels.size(); ++i) {
    const SweepLevel& a = sweep.levels[i];
    const SweepLevel& b = sweep.levels[i + 1];
    if (b.level != a.level + 1) {
      full = false;
      continue;
    }
    if (!a.complete || !b.complete) {
      full = false;
      continue;
    }
    const SweepLevel& best_side = best_of_higher ? b : a;
    const SweepLevel& worst_side = best_of_higher ? a : b;
    if (best_side.bestw > worst_side.worstw) {
      verdict.status = VerdictStatus::Fail;
      verdict.level_a = best_side.level;
      verdict.level_b = worst_side.level;
      verdict.best_at_a = best_side.bestw;
      verdict.worst_at_b = worst_side.worstw;
      verdict.detail = "bestw(" + std::to_string(best_side.level) + ") = " +
                       format_rational(best_side.bestw) + " > worstw(" +
                       std::to_string(worst_side.level) + ") = " +
                       format_rational(worst_side.worstw);
      return verdict;
    }
  }
  verdict.status = full ? VerdictStatus::Pass : VerdictStatus::Inconclusive;
  if (!full) verdict.detail = "sweep does not cover the full level range";
  return verdict;
}

Verdict reference_check(const SweepResult& sweep, int reference_level, bool reference_is_floor) {
  // BWR compares every bestw(b) with worstw(b_max); BFR with worstw(1).
  Verdict verdict;
  const SweepLevel* ref = find_level(sweep, reference_level);
  if (ref == nullptr || !ref->complete) {
    verdict.detail = "reference level " + std::to_string(reference_level) + " not computed";
    return verdict;
  }
  bool full = sweep.covers_full_range;
  for (const SweepLevel& row : sweep.levels) {
    if (row.level == reference_level) continue;
    if (reference_is_floor && row.level < 2) continue;
    if (!row.complete) {
      full = false;
      continue;
    }
    if (row.bestw > ref->worstw) {
      verdict.status = VerdictStatus::Fail;
      verdict.level_a = row.level;
      verdict.level_b = reference_level;
      verdict.best_at_a = row.bestw;
      verdict.worst_at_b = ref->worstw;
      verdict.detail = "bestw(" + std::to_string(row.level) + ") = " + format_rational(row.bestw) +
                       " > worstw(" + std::to_string(reference_level) + ") = " +
                       format_rational(ref->worstw);
      return verdict;
    }
  }
  verdict.status = full ? VerdictStatus::Pass : VerdictStatus::Inconclusive;
  if (!full) verdict.detail = "sweep does not cover the full level range";
  return verdict;
}

}  // namespace

SweepResult sweep(const dnc::DncGame& game, const SweepOptions& options) {
  dnc::require_valid(game);
  int b_bar = dnc::longest_simple_st_path_weight(game);
  auto paths_for = [&](int level) {
    dnc::DncGame bounded = game;
    bounded.bound = level;
    return solve::make_view(bounded, dnc::enumerate_strategies(bounded));
  };
  return run_sweep(b_bar, options, paths_for);
}

SweepResult sweep(const gmg::GmgLayout& layout, const SweepOptions& options) {
  gmg::require_valid(layout);
  int b_bar = layout.max_level();
  auto strategies_for = [&](int level) {
    return solve::make_view(layout, gmg::enumerate_strategies(layout, level));
  };
  return run_sweep(b_bar, options, strategies_for);
}

Verdict check_pp(const SweepResult& sweep) { return pairwise_check(sweep, false); }

Verdict check_ap(const SweepResult& sweep) { return pairwise_check(sweep, true); }

Verdict check_bwr(const SweepResult& sweep) {
  return reference_check(sweep, sweep.max_capability, false);
}

Verdict check_bfr(const SweepResult& sweep) { return reference_check(sweep, 1, true); }

std::string verdict_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string sweep_to_csv(const SweepResult& sweep) {
  std::string out = "b,bestw,worstw,centralized_best,pne_count,complete\n";
  for (const SweepLevel& row : sweep.levels) {
    out += std::to_string(row.level) + ",";
    if (row.complete) {
      out += format_rational(row.bestw) + "," + format_rational(row.worstw) + ",";
      out += row.centralized ? format_rational(*row.centralized) : std::string("NA");
      out += "," + std::to_string(row.pne_count) + ",yes\n";
    } else {
      out += "NA,NA,NA,0,no\n";
    }
  }
  out += "# max_capability," + std::to_string(sweep.max_capability) + "\n";
  struct Entry {
    const char* name;
    Verdict verdict;
  } entries[] = {
      {"pp", check_pp(sweep)},
      {"bwr", check_bwr(sweep)},
      {"ap", check_ap(sweep)},
      {"bfr", check_bfr(sweep)},
  };
  for (const Entry& e : entries) {
    out += std::string("# ") + e.name + "," + verdict_name(e.verdict.status);
    if (!e.verdict.detail.empty()) out += "," + e.verdict.detail;
    out += "\n";
  }
  return out;
}

}  // namespace capgames::props
