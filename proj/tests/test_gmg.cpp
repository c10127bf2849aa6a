#include <doctest.h>

#include "capgames/dnc/evaluate.hpp"
#include "capgames/errors.hpp"
#include "capgames/gmg/convert.hpp"
#include "capgames/gmg/json.hpp"
#include "capgames/gmg/layout.hpp"
#include "capgames/solve/enumerate_pnes.hpp"
#include "capgames/solve/view.hpp"
#include "test_util.hpp"

using namespace capgames;
using namespace capgames::gmg;

namespace {

GmgLayout three_gold_layout(int players) {
  GmgLayout layout;
  layout.lines = 2;
  layout.players = players;
  layout.bound = 3;
  layout.gold_payoff.assign(players, Rational(1));
  layout.mine_payoff.assign(players, Rational(-1));
  layout.resources = {Resource{Rational(1), 0, ResourceKind::Gold},
                      Resource{Rational(2), 0, ResourceKind::Gold},
                      Resource{Rational(3), 0, ResourceKind::Gold}};
  return finalize_layout(std::move(layout));
}

}  // namespace

TEST_CASE("payoff: lone player covering three gold") {
  GmgLayout layout = three_gold_layout(1);
  GmgProfile profile{{constant_strategy(3, 0)}};
  CHECK(payoff(layout, profile, 0) == Rational(3));
  CHECK(social_welfare(layout, profile) == Rational(3));
}

TEST_CASE("welfare equals the resource-sum form on random profiles") {
  testutil::Rng rng(7321);
  for (int round = 0; round < 25; ++round) {
    GmgLayout layout = testutil::random_gmg(rng, 6, 3, 2);
    auto space = enumerate_strategies(layout, layout.bound);
    GmgProfile profile;
    for (int i = 0; i < layout.players; ++i) {
      profile.strategies.push_back(space[testutil::uniform(rng, 0, space.size() - 1)]);
    }
    Rational by_players = social_welfare(layout, profile);
    std::vector<int> x = loads(layout, profile);
    Rational by_resources = 0;
    for (int t = 0; t < layout.resource_count(); ++t) {
      if (x[t] > 0) by_resources += Rational(x[t]) * layout.payoff_at(t, x[t]);
    }
    CHECK(by_players == by_resources);
  }
}

TEST_CASE("interval form: canonical intervals round trip and segment counts") {
  IntervalStrategy s{std::vector<int>{1, 1, 0, 0, 1, 0}};
  CHECK(s.segments() == 4);
  auto intervals = line1_intervals(s);
  REQUIRE(intervals.size() == 2);
  CHECK(intervals[0] == std::pair<int, int>{0, 1});
  CHECK(intervals[1] == std::pair<int, int>{4, 4});
  CHECK(strategy_from_intervals(6, intervals) == s);

  SUBCASE("idempotent on random strategies") {
    testutil::Rng rng(99);
    for (int round = 0; round < 50; ++round) {
      int n = testutil::uniform(rng, 1, 10);
      IntervalStrategy t;
      for (int i = 0; i < n; ++i) t.line.push_back(testutil::uniform(rng, 0, 1));
      auto iv = line1_intervals(t);
      IntervalStrategy back = strategy_from_intervals(n, iv);
      CHECK(back == t);
      CHECK(line1_intervals(back) == iv);
      CHECK(back.segments() == t.segments());
      // Canonical form: gaps between intervals at least 2.
      for (size_t k = 1; k < iv.size(); ++k) CHECK(iv[k].first - iv[k - 1].second >= 2);
    }
  }
}

TEST_CASE("enumerate_strategies: counts match the closed form") {
  SUBCASE("|E|=2, K=2 levels 1 and 2") {
    GmgLayout layout = three_gold_layout(1);
    layout.resources.pop_back();
    auto level1 = enumerate_strategies(layout, 1);
    REQUIRE(level1.size() == 2);
    CHECK(level1[0].line == std::vector<int>{0, 0});
    CHECK(level1[1].line == std::vector<int>{1, 1});
    CHECK(enumerate_strategies(layout, 2).size() == 4);
  }
  SUBCASE("random sizes against the combinatorial recount") {
    testutil::Rng rng(31415);
    for (int round = 0; round < 20; ++round) {
      GmgLayout layout = testutil::random_gmg(rng, 6, 3, 1);
      for (int level = 1; level <= layout.resource_count(); ++level) {
        auto space = enumerate_strategies(layout, level);
        CHECK(BigInt(space.size()) == strategy_count(layout.resource_count(), layout.lines, level));
        for (const auto& s : space) CHECK(s.segments() <= level);
      }
    }
  }
}

TEST_CASE("gold welfare is the exact product") {
  GmgLayout layout = three_gold_layout(3);
  layout.gold_payoff = {Rational(1), Rational(9, 10), Rational(1, 2)};
  CHECK(gold_welfare(layout, 1) == Rational(1));
  CHECK(gold_welfare(layout, 2) == Rational(9, 5));
  CHECK(gold_welfare(layout, 3) == Rational(3, 2));
  CHECK_THROWS_AS(gold_welfare(layout, 4), DomainError);
}

TEST_CASE("coverage stats") {
  GmgLayout layout = three_gold_layout(2);
  layout.resources[1].kind = ResourceKind::Mine;
  IntervalStrategy all = constant_strategy(3, 0);
  IntervalStrategy none = constant_strategy(3, 1);
  CoverageStats stats = coverage(layout, all, &none);
  CHECK(stats.gold == 2);
  CHECK(stats.mines == 1);
  CHECK(stats.shared_gold == 0);
  CoverageStats overlap = coverage(layout, all, &all);
  CHECK(overlap.shared_gold == 2);
  CHECK(stats.gold + stats.mines <= layout.resource_count());
}

TEST_CASE("to_dncda: single gold on two lines") {
  GmgLayout layout;
  layout.lines = 2;
  layout.players = 2;
  layout.bound = 1;
  layout.gold_payoff = {Rational(2), Rational(1)};
  layout.mine_payoff = {Rational(-1), Rational(-1)};
  layout.resources = {Resource{Rational(1), 0, ResourceKind::Gold}};
  layout = finalize_layout(std::move(layout));

  auto conversion = to_dncda(layout);
  CHECK(dnc::validate_game(conversion.game).ok());
  CHECK(conversion.game.bound == 1);

  // The covering strategy maps to a path whose delay is -r_g(load).
  IntervalStrategy cover = constant_strategy(1, 0);
  dnc::PathStrategy path = conversion.path_for(cover);
  dnc::require_valid_strategy(conversion.game, path);
  dnc::Profile profile{{path, conversion.path_for(constant_strategy(1, 1))}};
  CHECK(dnc::player_delay(conversion.game, profile, 0) == Rational(-2));
  CHECK(conversion.strategy_for(path) == cover);
}

TEST_CASE("to_dncda: payoffs match negated path delays for all profiles") {
  testutil::Rng rng(161803);
  for (int round = 0; round < 12; ++round) {
    GmgLayout layout = testutil::random_gmg(rng, 5, 3, 2, /*monotone_tables=*/true);
    auto conversion = to_dncda(layout);
    REQUIRE(dnc::validate_game(conversion.game).ok());

    auto space = enumerate_strategies(layout, layout.bound);
    for (const auto& s1 : space) {
      for (const auto& s2 : space) {
        GmgProfile gp{{s1, s2}};
        dnc::Profile dp{{conversion.path_for(s1), conversion.path_for(s2)}};
        for (int player = 0; player < 2; ++player) {
          CHECK(payoff(layout, gp, player) == -dnc::player_delay(conversion.game, dp, player));
        }
        CHECK(social_welfare(layout, gp) == dnc::social_welfare(conversion.game, dp));
      }
    }
    // Bijection: k segments <-> weighted length k, both directions.
    for (const auto& s : space) {
      dnc::PathStrategy path = conversion.path_for(s);
      CHECK(dnc::path_weight(conversion.game, path) == s.segments());
      CHECK(conversion.strategy_for(path) == s);
    }
  }
}

TEST_CASE("to_dncda: PNE sets correspond at matching levels") {
  testutil::Rng rng(55);
  for (int round = 0; round < 6; ++round) {
    GmgLayout layout = testutil::random_gmg(rng, 4, 2, 2, /*monotone_tables=*/true);
    auto conversion = to_dncda(layout);

    auto gmg_space = enumerate_strategies(layout, layout.bound);
    auto gmg_set = solve::enumerate_pnes(solve::make_view(layout, gmg_space));

    auto dnc_space = dnc::enumerate_strategies(conversion.game);
    auto dnc_set = solve::enumerate_pnes(solve::make_view(conversion.game, dnc_space));

    CHECK(gmg_set.count == dnc_set.count);
    CHECK(gmg_set.bestw == dnc_set.bestw);
    CHECK(gmg_set.worstw == dnc_set.worstw);
  }
}

TEST_CASE("maximal capability: the unique equilibrium covers all gold, no mines") {
  // Needs a second line to stand off the mines, so K = 1 draws are skipped.
  testutil::Rng rng(515151);
  for (int round = 0; round < 8; ++round) {
    GmgLayout layout;
    do {
      layout = testutil::random_gmg(rng, 5, 2, 2);
    } while (layout.lines < 2);
    auto set = solve::enumerate_pnes(
        solve::make_view(layout, enumerate_strategies(layout, layout.max_level())));
    REQUIRE(set.count == 1);
    auto space = enumerate_strategies(layout, layout.max_level());
    int gold_count = 0;
    for (const auto& r : layout.resources) gold_count += r.kind == ResourceKind::Gold;
    for (int s : set.profiles[0]) {
      CoverageStats stats = coverage(layout, space[s]);
      CHECK(stats.gold == gold_count);
      CHECK(stats.mines == 0);
    }
    CHECK(set.bestw == Rational(layout.players) * Rational(gold_count) *
                           layout.gold_payoff[layout.players - 1]);
  }
}

TEST_CASE("welfare bound when gold welfare peaks at full load") {
  // Constant r_g makes w_g(x) = x r_g maximal at x = n; every profile's
  // welfare is then at most n M_g r_g(n).
  testutil::Rng rng(626262);
  for (int round = 0; round < 6; ++round) {
    GmgLayout layout = testutil::random_gmg(rng, 4, 2, 2);
    layout.gold_payoff.assign(layout.players, Rational(testutil::uniform(rng, 1, 3)));
    int gold_count = 0;
    for (const auto& r : layout.resources) gold_count += r.kind == ResourceKind::Gold;
    Rational cap = Rational(layout.players) * Rational(gold_count) *
                   layout.gold_payoff[layout.players - 1];
    auto space = enumerate_strategies(layout, layout.max_level());
    for (const auto& s1 : space) {
      for (const auto& s2 : space) {
        CHECK(social_welfare(layout, GmgProfile{{s1, s2}}) <= cap);
      }
    }
  }
}

TEST_CASE("layout json round trip") {
  testutil::Rng rng(777111);
  GmgLayout layout = testutil::random_gmg(rng, 6, 3, 2);
  GmgLayout back = layout_from_json(layout_to_json(layout));
  CHECK(back.lines == layout.lines);
  CHECK(back.players == layout.players);
  CHECK(back.bound == layout.bound);
  CHECK(back.gold_payoff == layout.gold_payoff);
  CHECK(back.mine_payoff == layout.mine_payoff);
  REQUIRE(back.resource_count() == layout.resource_count());
  for (int t = 0; t < layout.resource_count(); ++t) {
    CHECK(back.resources[t].x == layout.resources[t].x);
    CHECK(back.resources[t].line == layout.resources[t].line);
    CHECK((back.resources[t].kind == layout.resources[t].kind));
  }
}

TEST_CASE("layout validation rejects bad inputs") {
  GmgLayout layout = three_gold_layout(2);
  layout.gold_payoff = {Rational(1), Rational(0)};  // not positive
  CHECK(!validate_layout(layout).ok());
  GmgLayout dup = three_gold_layout(1);
  dup.resources.push_back(Resource{Rational(1), 1, ResourceKind::Mine});
  CHECK_THROWS_AS(finalize_layout(std::move(dup)), DomainError);
}
