#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capgames/dnc/game.hpp"
#include "capgames/gmg/layout.hpp"
#include "capgames/solve/enumerate_pnes.hpp"

namespace capgames::props {

struct SweepOptions {
  int level_min = 1;
  int level_max = 0;  // 0 = the instance's maximal capability
  bool centralized = false;
  std::uint64_t budget = 0;  // 0 = default budget
  int workers = 0;
};

struct SweepLevel {
  int level = 0;
  bool complete = false;  // false when the enumeration budget was exceeded
  std::uint64_t pne_count = 0;
  Rational bestw;
  Rational worstw;
  std::optional<Rational> centralized;
};

struct SweepResult {
  std::vector<SweepLevel> levels;
  int max_capability = 0;  // longest simple path weight / resource count
  bool covers_full_range = false;
};

/// Per-level equilibrium welfare extremes via exhaustive enumeration. Levels
/// whose enumeration exceeds the budget are kept as incomplete rows.
SweepResult sweep(const dnc::DncGame& game, const SweepOptions& options = {});
SweepResult sweep(const gmg::GmgLayout& layout, const SweepOptions& options = {});

enum class VerdictStatus { Pass, Fail, Inconclusive };

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::string detail;
  int level_a = 0;  // violating pair when status == Fail
  int level_b = 0;
  Rational best_at_a;
  Rational worst_at_b;
};

/// PP:  bestw(b) <= worstw(b+1) for consecutive levels.
Verdict check_pp(const SweepResult& sweep);
/// BWR: bestw(b) <= worstw(max capability) for every lower level.
Verdict check_bwr(const SweepResult& sweep);
/// AP:  bestw(b+1) <= worstw(b) for consecutive levels.
Verdict check_ap(const SweepResult& sweep);
/// BFR: bestw(b) <= worstw(1) for every level b >= 2.
Verdict check_bfr(const SweepResult& sweep);

std::string verdict_name(VerdictStatus status);

/// CSV rows b,bestw,worstw,centralized_best plus a verdict footer block.
std::string sweep_to_csv(const SweepResult& sweep);

}  // namespace capgames::props
