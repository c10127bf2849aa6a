#include <doctest.h>

#include "capgames/dnc/enumerate.hpp"
#include "capgames/dnc/evaluate.hpp"
#include "capgames/errors.hpp"
#include "capgames/gen/builders.hpp"
#include "capgames/gen/counterexamples.hpp"
#include "capgames/gen/gmg_counterexamples.hpp"
#include "capgames/gen/partition3.hpp"
#include "capgames/gen/threshold.hpp"
#include "capgames/solve/best_response.hpp"
#include "capgames/solve/enumerate_pnes.hpp"
#include "capgames/solve/view.hpp"
#include "test_util.hpp"

using namespace capgames;
using namespace capgames::gen;

namespace {

// Labeled PNEs of a 2-player threshold game by direct inspection of the
// four profiles (true = S_in).
std::set<std::pair<bool, bool>> threshold_pnes_2p(const ThresholdGame& tg) {
  const dnc::DelayTable& pair12 = tg.pair_table(1, 2);
  std::set<std::pair<bool, bool>> result;
  for (bool p1_in : {false, true}) {
    for (bool p2_in : {false, true}) {
      auto cost = [&](bool mine_in, bool other_in, int self_index) {
        if (mine_in) return pair12.at(other_in ? 2 : 1);
        return tg.self_delay[self_index].at(1);
      };
      Rational c1 = cost(p1_in, p2_in, 0);
      Rational c2 = cost(p2_in, p1_in, 1);
      Rational c1_dev = cost(!p1_in, p2_in, 0);
      Rational c2_dev = cost(!p2_in, p1_in, 1);
      if (c1 <= c1_dev && c2 <= c2_dev) result.insert({p1_in, p2_in});
    }
  }
  return result;
}

}  // namespace

TEST_CASE("weighted edge expansion") {
  dnc::DelayTable d({Rational(2), Rational(2)});
  SUBCASE("weight one is the edge itself") {
    dnc::DncGameBuilder b(dnc::Variant::Dnc);
    b.source("s").sink("t").bound(1).players(2);
    auto ids = add_weighted_edge(b, "s", "t", 1, d, "x");
    CHECK(ids == std::vector<std::string>{"s", "t"});
    CHECK(dnc::validate_game(b.build()).ok());
  }
  SUBCASE("weight three carries the delay on the first edge only") {
    dnc::DncGameBuilder b(dnc::Variant::Dnc);
    b.source("s").sink("t").bound(3).players(2);
    auto ids = add_weighted_edge(b, "s", "t", 3, d, "x");
    dnc::DncGame game = b.build();
    REQUIRE(ids.size() == 4);
    dnc::PathStrategy path;
    for (const auto& id : ids) path.vertices.push_back(game.vertex_index(id));
    dnc::Profile both{{path, path}};
    CHECK(dnc::player_delay(game, both, 0) == Rational(2));
    dnc::Profile one{{path, path}};
    one.strategies.pop_back();
    dnc::DncGame solo = game;
    solo.players = 1;
    CHECK(dnc::player_delay(solo, one, 0) == Rational(2));
  }
  SUBCASE("zero weight is rejected") {
    dnc::DncGameBuilder b(dnc::Variant::Dnc);
    CHECK_THROWS_AS(add_weighted_edge(b, "a", "b", 0, d, "x"), DomainError);
  }
}

TEST_CASE("threshold reduction: the four-player shape") {
  auto tg = uniform_threshold_game(4, dnc::DelayTable({Rational(1)}), dnc::DelayTable({Rational(1)}));
  auto reduction = threshold_to_dnc(tg);
  CHECK(dnc::validate_game(reduction.game).ok());
  CHECK(reduction.bound == 19);
  CHECK(reduction.jump_weight == std::vector<int>{8, 9, 12, 17});
  // s -> s_i chain lengths b - w_i - 1 = 10, 9, 6, 1.
  std::vector<int> expected{10, 9, 6, 1};
  for (int i = 1; i <= 4; ++i) {
    CHECK(reduction.bound - reduction.jump_weight[i - 1] - 1 == expected[i - 1]);
  }
  // Both canonical routes respect the bound exactly.
  for (int i = 0; i < 4; ++i) {
    CHECK(dnc::path_weight(reduction.game, reduction.in_path[i]) == reduction.bound);
    CHECK(dnc::path_weight(reduction.game, reduction.out_path[i]) == reduction.bound);
    dnc::require_valid_strategy(reduction.game, reduction.in_path[i]);
    dnc::require_valid_strategy(reduction.game, reduction.out_path[i]);
  }
}

TEST_CASE("threshold reduction: n=2 equilibria map onto the threshold game's") {
  // Thresholds that make (in, in) and (out, out) the equilibria.
  auto tg = uniform_threshold_game(2, dnc::DelayTable({Rational(1), Rational(3)}),
                                   dnc::DelayTable({Rational(2), Rational(2)}));
  auto expected = threshold_pnes_2p(tg);
  CHECK(expected.size() == 2);  // anti-coordination: (in,out) and (out,in)

  auto reduction = threshold_to_dnc(tg);
  auto space = dnc::enumerate_strategies(reduction.game);
  auto view = solve::make_view(reduction.game, space);
  auto set = solve::enumerate_pnes(view);

  // Each PNE multiset must use one gate per player and map to a threshold
  // profile; welfare mirrors resource delays plus the fixed gate delays.
  auto find_index = [&](const dnc::PathStrategy& p) {
    for (size_t i = 0; i < space.size(); ++i) {
      if (space[i] == p) return static_cast<int>(i);
    }
    return -1;
  };
  int in1 = find_index(reduction.in_path[0]), out1 = find_index(reduction.out_path[0]);
  int in2 = find_index(reduction.in_path[1]), out2 = find_index(reduction.out_path[1]);
  REQUIRE(in1 >= 0);
  REQUIRE(out1 >= 0);
  REQUIRE(in2 >= 0);
  REQUIRE(out2 >= 0);

  std::set<std::pair<bool, bool>> mapped;
  for (const auto& profile : set.profiles) {
    // Identify which of the canonical strategies each player uses.
    std::optional<bool> a, b;
    for (int s : profile) {
      if (s == in1) (a ? b : a) = true;
      if (s == out1) (a ? b : a) = false;
      if (s == in2) (b ? a : b) = true;
      if (s == out2) (b ? a : b) = false;
    }
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    mapped.insert({*a, *b});
    mapped.insert({*b, *a});  // multiset representative covers both labelings
  }
  CHECK(mapped == expected);
  CHECK(set.count == 2);  // {in1,out2} and {out1,in2}
}

TEST_CASE("threshold reduction: best responses pick the designated gates") {
  auto tg = uniform_threshold_game(2, dnc::DelayTable({Rational(1), Rational(3)}),
                                   dnc::DelayTable({Rational(2), Rational(2)}));
  auto reduction = threshold_to_dnc(tg);
  auto view = solve::make_view(reduction.game, dnc::enumerate_strategies(reduction.game));
  auto set = solve::enumerate_pnes(view);
  for (const auto& profile : set.profiles) {
    // In every equilibrium both gate fans carry one player each: delays on
    // (s, s_i) stay at their load-1 value of zero.
    auto loads = view.profile_loads(profile);
    dnc::DncGame& game = reduction.game;
    for (int i = 1; i <= 2; ++i) {
      int s_i = game.vertex_index("si" + padded(i, 2));
      REQUIRE(s_i >= 0);
      int incoming = 0;
      for (int e = 0; e < game.edge_count(); ++e) {
        if (game.edges[e].to == s_i) incoming += loads[e];
      }
      CHECK(incoming == 1);
    }
  }
}

namespace {

// Labeled threshold-game equilibria for any n by direct evaluation: each
// player picks S_in (true) or S_out (false); pair resources are loaded by
// the players on S_in.
std::set<std::vector<bool>> threshold_pnes(const ThresholdGame& tg) {
  std::set<std::vector<bool>> result;
  const int n = tg.n;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<bool> in(n);
    for (int i = 0; i < n; ++i) in[i] = mask >> i & 1;
    auto cost = [&](int player, bool plays_in) {
      if (!plays_in) return tg.self_delay[player].at(1);
      Rational total = 0;
      for (int other = 0; other < n; ++other) {
        if (other == player) continue;
        int load = 1 + (in[other] ? 1 : 0);
        total += tg.pair_table(player + 1, other + 1).at(load);
      }
      return total;
    };
    bool pne = true;
    for (int i = 0; i < n && pne; ++i) {
      if (cost(i, !in[i]) < cost(i, in[i])) pne = false;
    }
    if (pne) result.insert(in);
  }
  return result;
}

}  // namespace

TEST_CASE("threshold reduction: n=3 equilibria correspond as well") {
  auto tg = uniform_threshold_game(3, dnc::DelayTable({Rational(1), Rational(2), Rational(4)}),
                                   dnc::DelayTable({Rational(3), Rational(3), Rational(3)}));
  auto expected = threshold_pnes(tg);
  REQUIRE(!expected.empty());

  auto reduction = threshold_to_dnc(tg);
  auto space = dnc::enumerate_strategies(reduction.game);
  auto set = solve::enumerate_pnes(solve::make_view(reduction.game, space));

  auto find_index = [&](const dnc::PathStrategy& p) {
    for (size_t i = 0; i < space.size(); ++i) {
      if (space[i] == p) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<int> in_idx(3), out_idx(3);
  for (int i = 0; i < 3; ++i) {
    in_idx[i] = find_index(reduction.in_path[i]);
    out_idx[i] = find_index(reduction.out_path[i]);
    REQUIRE(in_idx[i] >= 0);
    REQUIRE(out_idx[i] >= 0);
  }
  // Every DNC equilibrium uses one canonical strategy per gate; collect the
  // labeled threshold profile it encodes.
  std::set<std::vector<bool>> mapped;
  for (const auto& profile : set.profiles) {
    std::vector<int> choice(3, -1);
    for (int s : profile) {
      for (int i = 0; i < 3; ++i) {
        if (s == in_idx[i]) choice[i] = 1;
        if (s == out_idx[i]) choice[i] = 0;
      }
    }
    std::vector<bool> in(3);
    bool complete = true;
    for (int i = 0; i < 3; ++i) {
      if (choice[i] < 0) complete = false;
      in[i] = choice[i] == 1;
    }
    REQUIRE(complete);
    mapped.insert(in);
  }
  CHECK(mapped == expected);
  CHECK(set.count == expected.size());
}

TEST_CASE("threshold reduction: off-equilibrium best responses pick a free gate") {
  auto tg = uniform_threshold_game(3, dnc::DelayTable({Rational(1), Rational(2), Rational(4)}),
                                   dnc::DelayTable({Rational(3), Rational(3), Rational(3)}));
  auto reduction = threshold_to_dnc(tg);
  const dnc::DncGame& game = reduction.game;
  // Players 0 and 1 sit on gates 1 and 2; the third player's best response
  // must enter through the free gate 3.
  dnc::Profile profile{{reduction.out_path[0], reduction.out_path[1], reduction.out_path[2]}};
  auto best = solve::best_response_dnc(game, profile, 2);
  REQUIRE(best.has_value());
  bool uses_gate3 = false;
  for (int v : best->path.vertices) {
    if (game.id_of(v) == "si03") uses_gate3 = true;
  }
  CHECK(uses_gate3);
}

TEST_CASE("partition3 best: yes and no instances") {
  Partition3Instance yes{{3, 3, 4, 3, 3, 4}, 10};
  Partition3Instance no{{9, 7, 6, 6, 6, 6}, 20};
  // Pre-screen both fixtures with the exhaustive partition search.
  CHECK(testutil::has_three_partition(yes.values, yes.target));
  CHECK(!testutil::has_three_partition(no.values, no.target));

  SUBCASE("yes-instance reaches m(6m-3) = 18") {
    dnc::DncGame game = partition3_best_to_dnc(yes);
    CHECK(dnc::validate_game(game).ok());
    auto set = solve::enumerate_pnes(solve::make_view(game, dnc::enumerate_strategies(game)));
    REQUIRE(!set.empty());
    CHECK(set.bestw == Rational(-18));
  }
  SUBCASE("no-instance stops at 19") {
    dnc::DncGame game = partition3_best_to_dnc(no);
    CHECK(dnc::validate_game(game).ok());
    auto set = solve::enumerate_pnes(solve::make_view(game, dnc::enumerate_strategies(game)));
    REQUIRE(!set.empty());
    CHECK(set.bestw == Rational(-19));
  }
  SUBCASE("degenerate m=1: a single player takes all three fast edges") {
    Partition3Instance tiny{{3, 3, 4}, 10};
    dnc::DncGame game = partition3_best_to_dnc(tiny);
    CHECK(dnc::validate_game(game).ok());
    auto set = solve::enumerate_pnes(solve::make_view(game, dnc::enumerate_strategies(game)));
    REQUIRE(!set.empty());
    CHECK(set.bestw == Rational(-3));  // 6m - 3 at m = 1
  }
}

TEST_CASE("partition3 instance validation") {
  CHECK_THROWS_AS(require_valid(Partition3Instance{{1, 2, 3}, 6}), DomainError);    // bounds
  CHECK_THROWS_AS(require_valid(Partition3Instance{{3, 3, 3}, 10}), DomainError);   // sum
  CHECK_THROWS_AS(require_valid(Partition3Instance{{3, 3}, 6}), DomainError);       // count
}

TEST_CASE("counterexample PP positive: d=(1,2)") {
  auto cex = cex_pp_positive(dnc::DelayTable({Rational(1), Rational(2)}));
  CHECK(cex.first_jump == 1);
  CHECK(cex.n1 == 1);
  CHECK(cex.n2 == 5);
  CHECK(cex.game.players == 2);
  CHECK(dnc::validate_game(cex.game).ok());
  CHECK(cex.w1 == Rational(-18));  // -(v+1)(N1+N2+3) d(v)
  CHECK(cex.w2 == Rational(-20));  // -(v+1)(2N1+3) d(v+1)

  // Level-1 equilibria all share w1; the level-2 worst equilibrium is w2.
  dnc::DncGame level1 = cex.game;
  level1.bound = 1;
  auto set1 = solve::enumerate_pnes(solve::make_view(level1, dnc::enumerate_strategies(level1)));
  CHECK(set1.bestw == cex.w1);
  CHECK(set1.worstw == cex.w1);
  auto set2 = solve::enumerate_pnes(solve::make_view(cex.game, dnc::enumerate_strategies(cex.game)));
  CHECK(set2.worstw == cex.w2);
  CHECK(set1.bestw > set2.worstw);

  CHECK_THROWS_AS(cex_pp_positive(dnc::constant_table(3, Rational(2))), DomainError);
  CHECK_THROWS_AS(cex_pp_positive(dnc::DelayTable({Rational(0), Rational(1)})), DomainError);
}

TEST_CASE("counterexample PP positive: level-1 equilibria are exactly the splits") {
  // v = 2: three players, so the splits are a = 1 and a = 2.
  auto cex = cex_pp_positive(dnc::DelayTable({Rational(1), Rational(1), Rational(2)}));
  CHECK(cex.first_jump == 2);
  CHECK(cex.game.players == 3);
  dnc::DncGame level1 = cex.game;
  level1.bound = 1;
  auto space = dnc::enumerate_strategies(level1);
  REQUIRE(space.size() == 2);
  auto view = solve::make_view(level1, space);
  auto set = solve::enumerate_pnes(view);
  CHECK(set.count == 2);  // {up, up, down} and {up, down, down}
  for (const auto& profile : set.profiles) {
    int ups = 0;
    for (int s : profile) ups += s == 0;
    CHECK(ups >= 1);
    CHECK(ups <= 2);
    CHECK(view.profile_welfare(profile) == cex.w1);
  }
}

TEST_CASE("counterexample PP zero: d=(0,1)") {
  auto cex = cex_pp_zero(dnc::DelayTable({Rational(0), Rational(1)}));
  CHECK(cex.first_jump == 1);
  CHECK(cex.game.players == 2);
  CHECK(cex.n1 == 1);
  CHECK(cex.n2 == 1);
  CHECK(dnc::validate_game(cex.game).ok());
  CHECK(cex.w1 == Rational(0));
  CHECK(cex.w2 == Rational(-2));  // -2v N1 d(2v)

  dnc::DncGame level1 = cex.game;
  level1.bound = 1;
  auto set1 = solve::enumerate_pnes(solve::make_view(level1, dnc::enumerate_strategies(level1)));
  CHECK(set1.bestw == cex.w1);
  auto set2 = solve::enumerate_pnes(solve::make_view(cex.game, dnc::enumerate_strategies(cex.game)));
  CHECK(set2.worstw == cex.w2);
  CHECK(set1.bestw > set2.worstw);

  CHECK_THROWS_AS(cex_pp_zero(dnc::DelayTable({Rational(1), Rational(2)})), DomainError);
}

TEST_CASE("counterexample AP: constant table d=1") {
  auto cex = cex_ap(dnc::constant_table(2, Rational(1)));
  CHECK(cex.game.players == 1);
  CHECK(dnc::validate_game(cex.game).ok());
  CHECK(cex.w1 == Rational(-3));
  CHECK(cex.w2 == Rational(-2));

  dnc::DncGame level1 = cex.game;
  level1.bound = 1;
  auto set1 = solve::enumerate_pnes(solve::make_view(level1, dnc::enumerate_strategies(level1)));
  auto set2 = solve::enumerate_pnes(solve::make_view(cex.game, dnc::enumerate_strategies(cex.game)));
  CHECK(set1.worstw == cex.w1);
  CHECK(set2.bestw == cex.w2);
  CHECK(set1.worstw < set2.bestw);  // AP violated

  CHECK_THROWS_AS(cex_ap(dnc::constant_table(2, Rational(0))), DomainError);
}

TEST_CASE("counterexample AP: multi-player split case") {
  // d = (0, 1): v = 2, two players split between route and shortcut.
  auto cex = cex_ap(dnc::DelayTable({Rational(0), Rational(1)}));
  CHECK(cex.game.players == 2);
  CHECK(cex.w1 == Rational(-6));  // -3 v d(v) with v = 2
  CHECK(cex.w2 == Rational(-2));  // -v d(v)
  dnc::DncGame level1 = cex.game;
  level1.bound = 1;
  auto set1 = solve::enumerate_pnes(solve::make_view(level1, dnc::enumerate_strategies(level1)));
  auto set2 = solve::enumerate_pnes(solve::make_view(cex.game, dnc::enumerate_strategies(cex.game)));
  CHECK(set1.worstw == cex.w1);
  CHECK(set2.bestw == cex.w2);
}

TEST_CASE("gmg counterexamples: all four PP cases at v=1") {
  struct Case {
    gmg::ResourceKind kind;
    std::vector<Rational> table;
    GmgCexCase expected;
  } cases[] = {
      {gmg::ResourceKind::Gold, {Rational(1), Rational(1, 2)}, GmgCexCase::GoldSqueeze},
      {gmg::ResourceKind::Gold, {Rational(1), Rational(2)}, GmgCexCase::GoldStuck},
      {gmg::ResourceKind::Mine, {Rational(-2), Rational(-1)}, GmgCexCase::MineStuck},
      {gmg::ResourceKind::Mine, {Rational(-1), Rational(-2)}, GmgCexCase::MineSqueeze},
  };
  for (const auto& c : cases) {
    CAPTURE(static_cast<int>(c.expected));
    auto cex = gmg_cex_pp(c.kind, c.table);
    CHECK(cex.kind == c.expected);
    CHECK(cex.layout.players == 2);
    CHECK(gmg::validate_layout(cex.layout).ok());

    auto view2 = solve::make_view(cex.layout, gmg::enumerate_strategies(cex.layout, 2));
    auto set1 = solve::enumerate_pnes(
        solve::make_view(cex.layout, gmg::enumerate_strategies(cex.layout, 1)));
    auto set2 = solve::enumerate_pnes(view2);
    CHECK(set1.bestw == cex.w1);
    CHECK(set2.worstw <= cex.w2);
    // The designed level-2 equilibrium value is attained by an actual PNE.
    bool attained = false;
    for (const auto& p : set2.profiles) {
      if (view2.profile_welfare(p) == cex.w2) attained = true;
    }
    CHECK(attained);
    CHECK(set1.bestw > set2.worstw);  // PP violated at levels 1 vs 2
  }
  CHECK_THROWS_AS(gmg_cex_pp(gmg::ResourceKind::Gold, {Rational(1), Rational(1)}), DomainError);
}

TEST_CASE("gmg squeeze block postconditions for the acceptance table") {
  auto cex = gmg_cex_pp(gmg::ResourceKind::Gold, {Rational(1), Rational(1, 2)});
  // For ratio 1/2 the block has N0 = 8 > 3/(1-ratio) = 6 and D(N) = 2 < 3.
  int n0 = 0, n1 = 0;
  for (int t = 0; t < cex.layout.resource_count() / 2; ++t) {
    (cex.layout.resources[t].line == 0 ? n0 : n1) += 1;
  }
  CHECK(n0 == 8);
  CHECK(n1 == 2);
}

TEST_CASE("gmg BWR counterexample: r_g=(1, 9/10, 1/2), n=3") {
  auto cex = gmg_cex_bwr({Rational(1), Rational(9, 10), Rational(1, 2)}, 3);
  CHECK(cex.peak_load == 2);
  CHECK(cex.w_peak == Rational(27, 5));
  CHECK(cex.w_full == Rational(9, 2));
  CHECK(gmg::validate_layout(cex.layout).ok());

  // The ring-cover profile is a level-n' equilibrium with welfare n w_g(n').
  auto profile = bwr_ring_profile(cex);
  for (const auto& s : profile.strategies) CHECK(s.segments() <= cex.peak_load);
  CHECK(gmg::social_welfare(cex.layout, profile) == cex.w_peak);
  auto view = solve::make_view(cex.layout, gmg::enumerate_strategies(cex.layout, cex.peak_load));
  std::vector<int> indices;
  auto space = gmg::enumerate_strategies(cex.layout, cex.peak_load);
  for (const auto& s : profile.strategies) {
    int found = -1;
    for (size_t i = 0; i < space.size(); ++i) {
      if (space[i] == s) found = static_cast<int>(i);
    }
    REQUIRE(found >= 0);
    indices.push_back(found);
  }
  CHECK(solve::is_pne(view, indices));

  // Full-capability equilibrium is unique: all players cover all gold.
  auto set_full = solve::enumerate_pnes(
      solve::make_view(cex.layout, gmg::enumerate_strategies(cex.layout, cex.layout.max_level())));
  CHECK(set_full.count == 1);
  CHECK(set_full.bestw == cex.w_full);

  CHECK_THROWS_AS(gmg_cex_bwr({Rational(1), Rational(1)}, 2), DomainError);
}

TEST_CASE("gmg BFR counterexample: constant gold table") {
  auto cex = gmg_cex_bfr({Rational(1), Rational(1)});
  CHECK(cex.n_gold == 2);
  CHECK(cex.w1 == Rational(4));  // n N r_g(n) = 2*2*1
  CHECK(cex.w2 == Rational(6));  // n (N+1) r_g(n)
  CHECK(gmg::validate_layout(cex.layout).ok());
  auto set1 =
      solve::enumerate_pnes(solve::make_view(cex.layout, gmg::enumerate_strategies(cex.layout, 1)));
  auto set2 =
      solve::enumerate_pnes(solve::make_view(cex.layout, gmg::enumerate_strategies(cex.layout, 2)));
  CHECK(set1.worstw == cex.w1);
  CHECK(set2.bestw == cex.w2);
  CHECK(set2.bestw > set1.worstw);  // BFR violated
}

TEST_CASE("every generated instance passes validation") {
  testutil::Rng rng(101);
  for (int round = 0; round < 5; ++round) {
    auto tg = uniform_threshold_game(testutil::uniform(rng, 2, 3),
                                     testutil::random_table(rng, 3, 4, 2),
                                     testutil::random_table(rng, 3, 4, 2));
    CHECK(dnc::validate_game(threshold_to_dnc(tg).game).ok());
  }
  CHECK(dnc::validate_game(partition3_best_to_dnc({{3, 3, 4, 3, 3, 4}, 10})).ok());
  CHECK(dnc::validate_game(partition3_worst_to_dnc({{3, 3, 4, 3, 3, 4}, 10})).ok());
  CHECK(dnc::validate_game(cex_pp_positive(dnc::DelayTable({Rational(1), Rational(3)})).game).ok());
  CHECK(dnc::validate_game(cex_pp_zero(dnc::DelayTable({Rational(0), Rational(2)})).game).ok());
  CHECK(dnc::validate_game(cex_ap(dnc::constant_table(1, Rational(5))).game).ok());
}
