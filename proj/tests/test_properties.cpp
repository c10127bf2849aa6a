#include <doctest.h>

#include "capgames/aog/aog.hpp"
#include "capgames/dnc/game.hpp"
#include "capgames/errors.hpp"
#include "capgames/gen/counterexamples.hpp"
#include "capgames/gen/gmg_counterexamples.hpp"
#include "capgames/props/properties.hpp"
#include "test_util.hpp"

using namespace capgames;
using namespace capgames::props;

namespace {

// All-edges-constant DncDaS instance with two routes of different lengths.
dnc::DncGame constant_delay_game(const Rational& delta) {
  dnc::DelayTable d = dnc::constant_table(2, delta);
  dnc::DncGameBuilder b(dnc::Variant::DncDaS);
  b.source("s").sink("t").bound(2).players(2);
  b.add_edge("s", "a", 1, d);
  b.add_edge("a", "b", 0, d);
  b.add_edge("b", "t", 0, d);
  b.add_edge("a", "t", 1, d);
  return b.build();
}

}  // namespace

TEST_CASE("sweep: constant-delay welfare is -n delta(b), non-decreasing") {
  dnc::DncGame game = constant_delay_game(Rational(1));
  SweepResult result = sweep(game);
  REQUIRE(result.levels.size() == 2);
  // delta(1) = 3 edges, delta(2) = 2 edges; welfare -n delta(b).
  CHECK(result.levels[0].bestw == Rational(-6));
  CHECK(result.levels[0].worstw == Rational(-6));
  CHECK(result.levels[1].bestw == Rational(-4));
  CHECK(result.levels[1].worstw == Rational(-4));
  CHECK(result.levels[0].bestw <= result.levels[1].bestw);

  CHECK(check_pp(result).status == VerdictStatus::Pass);
  CHECK(check_bwr(result).status == VerdictStatus::Pass);
  CHECK(check_ap(result).status == VerdictStatus::Fail);
}

TEST_CASE("sweep: zero-delay game has welfare zero at every level") {
  dnc::DncGame game = constant_delay_game(Rational(0));
  SweepResult result = sweep(game);
  for (const auto& row : result.levels) {
    CHECK(row.bestw == Rational(0));
    CHECK(row.worstw == Rational(0));
  }
  CHECK(check_pp(result).status == VerdictStatus::Pass);
  CHECK(check_ap(result).status == VerdictStatus::Pass);
  CHECK(check_bfr(result).status == VerdictStatus::Pass);
  CHECK(check_bwr(result).status == VerdictStatus::Pass);
}

TEST_CASE("checkers flag the PP counterexample at levels 1 vs 2") {
  auto cex = gen::cex_pp_positive(dnc::DelayTable({Rational(1), Rational(2)}));
  SweepResult result = sweep(cex.game);
  Verdict pp = check_pp(result);
  REQUIRE(pp.status == VerdictStatus::Fail);
  CHECK(pp.level_a == 1);
  CHECK(pp.level_b == 2);
  CHECK(pp.best_at_a == cex.w1);
  Verdict bwr = check_bwr(result);
  CHECK(bwr.status == VerdictStatus::Fail);
}

TEST_CASE("checkers flag the AP counterexample") {
  auto cex = gen::cex_ap(dnc::constant_table(1, Rational(1)));
  SweepResult result = sweep(cex.game);
  CHECK(check_ap(result).status == VerdictStatus::Fail);
  CHECK(check_bfr(result).status == VerdictStatus::Fail);
  // The constructed game actually improves with capability.
  CHECK(check_pp(result).status == VerdictStatus::Pass);
}

TEST_CASE("gmg sweeps: BWR and BFR counterexamples fail their properties") {
  SUBCASE("bwr") {
    auto cex = gen::gmg_cex_bwr({Rational(1), Rational(9, 10), Rational(1, 2)}, 3);
    SweepResult result = sweep(cex.layout);
    CHECK(result.max_capability == 3);
    Verdict verdict = check_bwr(result);
    REQUIRE(verdict.status == VerdictStatus::Fail);
    CHECK(verdict.level_b == 3);
  }
  SUBCASE("bfr fails on every generated instance") {
    for (const auto& table :
         {std::vector<Rational>{Rational(1), Rational(1)},
          std::vector<Rational>{Rational(2), Rational(1)},
          std::vector<Rational>{Rational(1), Rational(3, 2)}}) {
      auto cex = gen::gmg_cex_bfr(table);
      SweepResult result = sweep(cex.layout);
      CHECK(check_bfr(result).status == VerdictStatus::Fail);
    }
  }
}

TEST_CASE("partial sweeps are honest: fail stands, pass becomes inconclusive") {
  auto cex = gen::cex_pp_positive(dnc::DelayTable({Rational(1), Rational(2)}));
  SweepOptions opts;
  opts.level_min = 1;
  opts.level_max = 2;
  SweepResult partial = sweep(cex.game, opts);
  CHECK(partial.covers_full_range);  // b_bar happens to be 2 here
  opts.level_max = 1;
  SweepResult one_level = sweep(cex.game, opts);
  CHECK(!one_level.covers_full_range);
  CHECK(check_pp(one_level).status == VerdictStatus::Inconclusive);
  CHECK(check_bwr(one_level).status == VerdictStatus::Inconclusive);

  SUBCASE("budget-exceeded levels are flagged and verdicts stay inconclusive") {
    SweepOptions tight;
    tight.budget = 1;
    SweepResult starved = sweep(cex.game, tight);
    for (const auto& row : starved.levels) CHECK(!row.complete);
    CHECK(check_pp(starved).status == VerdictStatus::Inconclusive);
  }
}

TEST_CASE("logical weakening: PP pass implies BWR pass, AP pass implies BFR pass") {
  testutil::Rng rng(7070);
  int sweeps = 0;
  while (sweeps < 12) {
    dnc::DncGame game = testutil::random_dncda(rng, 6, 2, 3);
    try {
      SweepResult result = sweep(game);
      ++sweeps;
      if (check_pp(result).status == VerdictStatus::Pass) {
        CHECK(check_bwr(result).status == VerdictStatus::Pass);
      }
      if (check_ap(result).status == VerdictStatus::Pass) {
        CHECK(check_bfr(result).status == VerdictStatus::Pass);
      }
    } catch (const DomainError&) {
      continue;  // no s-t path in this draw
    }
  }
}

TEST_CASE("aog sweep matches the closed form per level") {
  aog::AogParams params{1, Rational(1, 5), Rational(-1, 2)};
  gmg::GmgLayout layout = aog::build_layout(params);
  SweepOptions opts;
  opts.level_max = 5;
  SweepResult result = sweep(layout, opts);
  for (const auto& row : result.levels) {
    CHECK(row.bestw == aog::w_eq_closed_form(params, row.level));
    CHECK(row.worstw == row.bestw);
  }
}

TEST_CASE("sweep csv shape and determinism") {
  auto cex = gen::cex_pp_positive(dnc::DelayTable({Rational(1), Rational(2)}));
  SweepResult result = sweep(cex.game);
  std::string csv = sweep_to_csv(result);
  CHECK(csv.find("b,bestw,worstw,centralized_best") == 0);
  CHECK(csv.find("# pp,fail") != std::string::npos);
  CHECK(csv == sweep_to_csv(sweep(cex.game)));
}
