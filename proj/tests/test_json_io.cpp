#include "doctest.h"
#include "iplrank/json_io.hpp"
#include "support/fixtures.hpp"

using namespace iplrank;

TEST_CASE("team config round trip") {
  TeamConfig cfg;
  cfg.keeper.distinct_primary = true;
  cfg.keeper.required_cluster = {std::nullopt, ClusterId::Opener};
  cfg.alternates_limit = 3;
  const auto back = team_config_from_json(to_json(cfg));
  CHECK(back.n == cfg.n);
  CHECK(back.value == cfg.value);
  CHECK(back.bucket_sizes == cfg.bucket_sizes);
  CHECK(back.keeper.distinct_primary);
  CHECK(back.keeper.required_cluster == cfg.keeper.required_cluster);
  CHECK(back.alternates_limit == 3);

  CHECK_THROWS(team_config_from_json(Json{{"buckets", {{"captain", 1}}}}));
  const auto bundled = team_config_from_json(read_json_file(std::string(IPLRANK_SOURCE_DIR) + "/data/team.json"));
  CHECK(bundled.keeper.distinct_primary);
}

TEST_CASE("engine config parsing") {
  const auto cfg = engine_config_from_json(read_json_file(std::string(IPLRANK_SOURCE_DIR) + "/data/engine.json"));
  CHECK(cfg.ranking.profile(ClusterId::Opener).total() == 100);
  CHECK(cfg.ranking.profile(ClusterId::Middle).total() == 100);
  CHECK(engine_config_from_json(Json{{"mean", "career"}}).ranking.mean_mode == MeanMode::Career);
  CHECK_THROWS_AS(engine_config_from_json(Json{{"mean", "median"}}), std::invalid_argument);
  CHECK_THROWS_AS(engine_config_from_json(Json{{"weights", {{"opener", {{"bogus", 100}}}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(engine_config_from_json(Json{{"weights", {{"opener", {{"cost_average", 60}}}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(engine_config_from_json(Json{{"credit_groups", {7, 9}}}), std::invalid_argument);
}

TEST_CASE("plan round trip") {
  const auto plan = select_team_v1(iplrank::testing::ample_pools(6), TeamConfig{});
  CHECK(team_plan_from_json(to_json(plan)) == plan);
  CHECK(to_json(plan)["total_spent"] == 135);
}

TEST_CASE("engine with a custom config ranks differently") {
  const auto d = load_dataset_dir(iplrank::testing::data_dir());
  const auto cfg = engine_config_from_json(read_json_file(std::string(IPLRANK_SOURCE_DIR) + "/data/engine.json"));
  const Engine custom(d, cfg);
  const Engine standard(d);
  CHECK(custom.rankings().at(ClusterId::Middle).entries[0].final_rank_score ==
        standard.rankings().at(ClusterId::Middle).entries[0].final_rank_score);
  bool differs = false;
  const auto& a = custom.rankings().at(ClusterId::Opener).entries;
  const auto& b = standard.rankings().at(ClusterId::Opener).entries;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].final_rank_score != b[i].final_rank_score;
  CHECK(differs);
}
