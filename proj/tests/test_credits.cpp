#include "doctest.h"
#include "iplrank/credits.hpp"
#include "support/fixtures.hpp"

using namespace iplrank;

namespace {

ClusterRanking ranking_of_size(std::size_t n) {
  std::vector<ClusterScore> entries;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = 1000.0 - static_cast<double>(i);
    char id[32];
    std::snprintf(id, sizeof id, "p%03zu", i);
    entries.push_back({id, ClusterId::Opener, s, s, s, 1});
  }
  return make_ranking(ClusterId::Opener, entries);
}

std::vector<Credit> credits_of(const ClusterCredits& c) {
  std::vector<Credit> out;
  for (const auto& e : c.entries) out.push_back(e.credit);
  return out;
}

std::vector<Credit> expand(const std::vector<std::pair<Credit, int>>& runs) {
  std::vector<Credit> out;
  for (auto [v, n] : runs) out.insert(out.end(), static_cast<std::size_t>(n), v);
  return out;
}

}  // namespace

TEST_CASE("twenty players split into equal fifths") {
  const auto c = assign_credits(ranking_of_size(20));
  CHECK(credits_of(c) == expand({{10, 5}, {9, 5}, {8, 5}, {7, 5}}));
  CHECK(c.group_boundaries == std::vector<std::size_t>{1, 6, 11, 16});
}

TEST_CASE("one player gets the top value") {
  CHECK(credits_of(assign_credits(ranking_of_size(1))) == std::vector<Credit>{10});
}

TEST_CASE("twenty-two players use groups of six") {
  CHECK(credits_of(assign_credits(ranking_of_size(22))) == expand({{10, 6}, {9, 6}, {8, 6}, {7, 4}}));
}

TEST_CASE("sizes where ceil leaves an empty group fall back to a balanced split") {
  CHECK(credit_group_sizes(5, 4) == std::vector<std::size_t>{2, 1, 1, 1});
  CHECK(credit_group_sizes(9, 4) == std::vector<std::size_t>{3, 2, 2, 2});
  CHECK(credit_group_sizes(3, 4) == std::vector<std::size_t>{1, 1, 1, 0});
  CHECK(credits_of(assign_credits(ranking_of_size(5))) == std::vector<Credit>{10, 10, 9, 8, 7});
}

TEST_CASE("credit config validation") {
  CreditConfig cfg;
  cfg.group_values = {10, 10, 8};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.group_values = {};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.group_values = {3, 2, 0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.group_values = {12, 6};
  CHECK_NOTHROW(cfg.validate());
  CHECK(credits_of(assign_credits(ranking_of_size(4), cfg)) == std::vector<Credit>{12, 12, 6, 6});
}

TEST_CASE("credits are monotone and cover every value for all sizes") {
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto c = assign_credits(ranking_of_size(n));
    REQUIRE(c.entries.size() == n);
    for (std::size_t i = 1; i < n; ++i) CHECK(c.entries[i].credit <= c.entries[i - 1].credit);
    CHECK(c.entries.front().credit == 10);
    if (n >= 4) CHECK(c.entries.back().credit == 7);
    std::size_t total = 0;
    for (auto s : credit_group_sizes(n, 4)) total += s;
    CHECK(total == n);
  }
}

TEST_CASE("credit table on the bundled dataset") {
  const auto d = load_dataset_dir(iplrank::testing::data_dir());
  const auto table = build_credit_table(rank_all(d));
  const auto& openers = table.cluster(ClusterId::Opener);
  REQUIRE(openers.entries.size() == d.batting_candidates().size());
  CHECK(table.credit(ClusterId::Opener, openers.entries.front().player) == 10);
  CHECK(!table.credit(ClusterId::Opener, "nobody").has_value());
  CHECK(table.cluster(ClusterId::Bowler).entries.size() == d.bowling_candidates().size());
}
