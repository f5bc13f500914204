#include <random>

#include "doctest.h"
#include "iplrank/kernels.hpp"
#include "iplrank/ranking.hpp"
#include "support/fixtures.hpp"

using namespace iplrank;
using doctest::Approx;

TEST_CASE("batting features: zero record") {
  const auto f = batting_features(BattingSeasonRecord{});
  CHECK(f.avg == 0);
  CHECK(f.strike_rate == 0);
  CHECK(f.run_wicket == 0);
  CHECK(f.hard_hitting == 0);
  CHECK(f.hc_per_innings == 0);
  CHECK(f.not_out_fraction == 0);
}

TEST_CASE("batting features: worked example") {
  BattingSeasonRecord r;
  r.runs = 60;
  r.balls_faced = 40;
  r.fours = 6;
  r.sixes = 2;
  r.innings = 2;
  r.not_outs = 1;
  r.fifties = 1;
  const auto f = batting_features(r);
  CHECK(f.avg == 60);
  CHECK(f.strike_rate == 150);
  CHECK(f.hard_hitting == Approx(0.9).epsilon(1e-15));
  CHECK(f.run_wicket == Approx(0.75).epsilon(1e-15));
  CHECK(f.hc_per_innings == 0.5);
  CHECK(f.not_out_fraction == 0.5);
}

TEST_CASE("batting average denominator sentinel") {
  BattingSeasonRecord r;
  r.innings = 2;
  r.not_outs = 2;
  r.runs = 10;
  CHECK(batting_features(r).avg == 10);
}

TEST_CASE("hundreds count as half-centuries") {
  BattingSeasonRecord r;
  r.innings = 4;
  r.hundreds = 1;
  r.fifties = 1;
  r.runs = 200;
  r.balls_faced = 150;
  CHECK(batting_features(r).hc_per_innings == 0.5);
}

TEST_CASE("bowling features: zero record and worked example") {
  const auto z = bowling_features(BowlingSeasonRecord{});
  CHECK(z.wicket_per_ball == 0);
  CHECK(z.consistency == 0);
  CHECK(z.inv_economy == 0);
  CHECK(z.inv_average == 0);

  BowlingSeasonRecord r;
  r.wickets = 7;
  r.four_hauls = 1;
  r.balls_bowled = 120;
  r.runs_conceded = 140;
  const auto f = bowling_features(r);
  CHECK(f.wicket_per_ball == Approx(7.0 / 120).epsilon(1e-15));
  CHECK(f.consistency == Approx(0.35).epsilon(1e-15));
  CHECK(f.inv_average == Approx(0.05).epsilon(1e-15));
  CHECK(f.inv_economy == Approx(120.0 / 840).epsilon(1e-15));
}

TEST_CASE("bowling inverses substitute one run when nothing was conceded") {
  BowlingSeasonRecord r;
  r.balls_bowled = 6;
  r.wickets = 1;
  const auto f = bowling_features(r);
  CHECK(f.inv_average == 1);
  CHECK(f.inv_economy == 1);
}

TEST_CASE("cost_normalize") {
  const auto out = cost_normalize({{"A", 2}, {"B", 4}, {"C", 8}});
  CHECK(out.at("A") == 0.25);
  CHECK(out.at("B") == 0.5);
  CHECK(out.at("C") == 1.0);
  CHECK(cost_normalize({{"A", 7}}).at("A") == 1.0);
  const auto zero = cost_normalize({{"A", 0}, {"B", 0}});
  CHECK(zero.at("A") == 0);
  CHECK(zero.at("B") == 0);
  CHECK_THROWS_AS(cost_normalize({}), std::invalid_argument);
  CHECK_THROWS_AS(cost_normalize({{"A", -1}}), std::invalid_argument);
}

TEST_CASE("cost_normalize properties: scale invariance, bounds, monotonicity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(0, 500);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<PlayerId, double> v;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) v["p" + std::to_string(i)] = value(rng);
    const double c = scale(rng);
    std::map<PlayerId, double> scaled;
    for (const auto& [k, x] : v) scaled[k] = x * c;
    const auto a = cost_normalize(v);
    const auto b = cost_normalize(scaled);
    for (const auto& [k, x] : a) {
      CHECK(std::abs(x - b.at(k)) <= 1e-12);
      CHECK(x >= 0);
      CHECK(x <= 1);
    }
    // raise one player's value
    auto bumped = v;
    bumped["p0"] += value(rng);
    CHECK(cost_normalize(bumped).at("p0") >= a.at("p0"));
  }
}

TEST_CASE("experience factor") {
  iplrank::testing::CsvTriple t;
  t.players += "A,Alpha,false,false\nB,Beta,false,false\nC,Gamma,false,false\n";
  t.batting += "A,2018,10,0,10,10,0,0,0,0\nB,2018,30,0,10,10,0,0,0,0\nC,2018,50,0,10,10,0,0,0,0\n";
  const auto d = t.load(100);
  const std::vector<PlayerId> pool = {"A", "B", "C"};
  const auto a = experience(d, "A", pool);
  CHECK(a.xfact == Approx(0.1).epsilon(1e-15));
  CHECK(a.cost_xfact == Approx(0.25).epsilon(1e-12));
  CHECK(experience(d, "B", pool).cost_xfact == Approx(0.75).epsilon(1e-12));
  CHECK(experience(d, "C", pool).cost_xfact == Approx(1.25).epsilon(1e-12));
  CHECK(experience(d, "A", {"A"}).cost_xfact == 1.0);
  CHECK_THROWS_AS(experience(d, "A", {"B"}), std::invalid_argument);

  iplrank::testing::CsvTriple same;
  same.players += "A,Alpha,false,false\nB,Beta,false,false\n";
  same.batting += "A,2018,8,0,10,10,0,0,0,0\nB,2018,8,0,10,10,0,0,0,0\n";
  const auto ds = same.load();
  CHECK(experience(ds, "A", {"A", "B"}).cost_xfact == 1.0);
  CHECK(experience(ds, "B", {"A", "B"}).cost_xfact == 1.0);
}

TEST_CASE("league innings count does not change cost_xfact") {
  const auto base = load_dataset_dir(iplrank::testing::data_dir());
  const auto pool = base.batting_candidates();
  const auto ref = cost_xfacts(base, pool, Discipline::Batting);
  for (std::int64_t league : {base.total_league_innings(), std::int64_t{1000}, std::int64_t{123457},
                              std::int64_t{9999999}}) {
    const Dataset other(base.players(), base.batting(), base.bowling(), league);
    const auto x = cost_xfacts(other, pool, Discipline::Batting);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x[i] - ref[i]) <= 1e-12);
  }
}

TEST_CASE("run-wicket decomposition is conservative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    BattingSeasonRecord r;
    r.balls_faced = 1 + static_cast<std::int64_t>(rng() % 400);
    r.fours = static_cast<std::int64_t>(rng() % (r.balls_faced / 2 + 1));
    r.sixes = static_cast<std::int64_t>(rng() % (r.balls_faced - r.fours + 1));
    const auto other_balls = r.balls_faced - r.fours - r.sixes;
    r.runs = 4 * r.fours + 6 * r.sixes + static_cast<std::int64_t>(rng() % (2 * other_balls + 1));
    r.innings = 1 + static_cast<std::int64_t>(rng() % 10);
    const auto f = batting_features(r);
    if (other_balls > 0) {
      CHECK(f.run_wicket * static_cast<double>(other_balls) + 4.0 * r.fours + 6.0 * r.sixes ==
            Approx(static_cast<double>(r.runs)).epsilon(1e-12));
    }
    CHECK(f.hc_per_innings <= 1);
    CHECK(f.not_out_fraction <= 1);
  }
}

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  std::mt19937_64 rng(99);
  const std::size_t n = 5000;
  std::vector<BattingSeasonRecord> bat(n);
  std::vector<BowlingSeasonRecord> bowl(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& r = bat[i];
    r.innings = static_cast<std::int64_t>(rng() % 150);
    r.not_outs = r.innings ? static_cast<std::int64_t>(rng() % (r.innings + 1)) : 0;
    r.balls_faced = static_cast<std::int64_t>(rng() % 3000);
    r.fours = r.balls_faced ? static_cast<std::int64_t>(rng() % (r.balls_faced / 4 + 1)) : 0;
    r.sixes = r.balls_faced ? static_cast<std::int64_t>(rng() % (r.balls_faced / 8 + 1)) : 0;
    r.runs = 4 * r.fours + 6 * r.sixes + static_cast<std::int64_t>(rng() % 1000);
    r.fifties = r.innings ? static_cast<std::int64_t>(rng() % (r.innings / 3 + 1)) : 0;
    auto& w = bowl[i];
    w.balls_bowled = static_cast<std::int64_t>(rng() % 3000);
    w.wickets = w.balls_bowled ? static_cast<std::int64_t>(rng() % (w.balls_bowled / 10 + 1)) : 0;
    w.runs_conceded = static_cast<std::int64_t>(rng() % 4000);
    w.four_hauls = w.wickets / 12;
  }
  std::vector<FeatureRow> a(n), b(n);
  kernels::batting_rows_serial(bat, a);
  kernels::batting_rows_parallel(bat, b);
  CHECK(a == b);
  const std::array<Feature, 4> cols = {Feature::CostStrikeRate, Feature::CostAverage, Feature::CostRunWicket,
                                       Feature::CostHardHitting};
  kernels::normalize_columns_serial(a, cols);
  kernels::normalize_columns_parallel(b, cols);
  CHECK(a == b);

  std::vector<double> sa(n), sb(n), xfact(n), fa(n), fb(n);
  const auto w = default_profile(ClusterId::Opener).dense();
  kernels::weighted_scores_serial(a, w, sa);
  kernels::weighted_scores_parallel(b, w, sb);
  CHECK(sa == sb);
  for (auto& x : xfact) x = static_cast<double>(rng() % 1000) / 300.0;
  kernels::final_scores_serial(sa, sb, xfact, 42.5, fa);
  kernels::final_scores_parallel(sa, sb, xfact, 42.5, fb);
  CHECK(fa == fb);

  std::vector<FeatureRow> c(n), e(n);
  kernels::bowling_rows_serial(bowl, c);
  kernels::bowling_rows_parallel(bowl, e);
  CHECK(c == e);
}
