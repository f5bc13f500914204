#include "iplrank/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace iplrank {

namespace {

ClusterId cluster_or_throw(const std::string& name) {
  auto c = parse_cluster(name);
  if (!c) throw std::invalid_argument("unknown cluster '" + name + "'");
  return *c;
}

Bucket bucket_or_throw(const std::string& name) {
  auto b = parse_bucket(name);
  if (!b) throw std::invalid_argument("unknown bucket '" + name + "'");
  return *b;
}

}  // namespace

TeamConfig team_config_from_json(const Json& j) {
  try {
    TeamConfig cfg;
    if (!j.is_object()) throw std::invalid_argument("team config must be an object");
    cfg.n = j.value("n", cfg.n);
    cfg.value = j.value("value", cfg.value);
    if (j.contains("buckets")) {
      cfg.bucket_sizes = {};
      for (const auto& [name, k] : j.at("buckets").items()) cfg.bucket_sizes[index_of(bucket_or_throw(name))] = k.get<int>();
    }
    if (j.contains("keeper_constraints")) {
      const auto& kc = j.at("keeper_constraints");
      cfg.keeper.distinct_primary = kc.value("distinct_primary", false);
      if (kc.contains("required_clusters")) {
        for (const auto& c : kc.at("required_clusters")) {
          if (c.is_null()) cfg.keeper.required_cluster.emplace_back();
          else cfg.keeper.required_cluster.emplace_back(cluster_or_throw(c.get<std::string>()));
        }
      }
    }
    cfg.alternates_limit = j.value("alternates_limit", cfg.alternates_limit);
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed team config: ") + e.what());
  }
}

Json to_json(const TeamConfig& cfg) {
  Json buckets = Json::object();
  for (auto b : kBucketOrder) buckets[std::string(bucket_name(b))] = cfg.size(b);
  Json required = Json::array();
  for (const auto& c : cfg.keeper.required_cluster) {
    required.push_back(c ? Json(std::string(cluster_name(*c))) : Json(nullptr));
  }
  return {{"n", cfg.n},
          {"value", cfg.value},
          {"buckets", buckets},
          {"keeper_constraints", {{"distinct_primary", cfg.keeper.distinct_primary}, {"required_clusters", required}}},
          {"alternates_limit", cfg.alternates_limit}};
}

EngineConfig engine_config_from_json(const Json& j) {
  try {
    EngineConfig cfg;
    if (j.contains("weights")) {
      for (const auto& [cluster, weights] : j.at("weights").items()) {
        std::vector<std::pair<std::string, double>> named;
        for (const auto& [feature, w] : weights.items()) named.emplace_back(feature, w.get<double>());
        cfg.ranking.profile(cluster_or_throw(cluster)) = WeightProfile::from_names(named);
      }
    }
    if (j.contains("mean")) {
      const auto mode = j.at("mean").get<std::string>();
      if (mode == "current") cfg.ranking.mean_mode = MeanMode::Current;
      else if (mode == "career") cfg.ranking.mean_mode = MeanMode::Career;
      else throw std::invalid_argument("mean must be 'current' or 'career'");
    }
    if (j.contains("credit_groups")) cfg.credits.group_values = j.at("credit_groups").get<std::vector<Credit>>();
    cfg.ranking.validate();
    cfg.credits.validate();
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed engine config: ") + e.what());
  }
}

Json to_json(const TeamPlan& plan, const NameLookup& name_of) {
  Json slots = Json::array();
  for (const auto& s : plan.slots) {
    Json slot = {{"bucket", bucket_name(s.bucket)},
                 {"position", s.position},
                 {"player_id", s.vacant() ? Json(nullptr) : Json(s.player)},
                 {"credit", s.credit},
                 {"primary", cluster_name(s.primary)}};
    if (name_of && !s.vacant()) slot["name"] = name_of(s.player);
    slots.push_back(std::move(slot));
  }
  Json buckets = Json::object();
  for (auto b : kBucketOrder) {
    const auto& st = plan.buckets[index_of(b)];
    Json jb = {{"cap", st.cap}, {"remaining", st.remaining}};
    if (!st.failure.empty()) jb["failure"] = st.failure;
    buckets[std::string(bucket_name(b))] = std::move(jb);
  }
  return {{"value", plan.value}, {"total_spent", plan.total_spent()}, {"slots", slots}, {"buckets", buckets}};
}

TeamPlan team_plan_from_json(const Json& j) {
  TeamPlan plan;
  plan.value = j.at("value").get<Credit>();
  for (const auto& s : j.at("slots")) {
    Slot slot;
    slot.bucket = bucket_or_throw(s.at("bucket").get<std::string>());
    slot.position = s.at("position").get<std::size_t>();
    if (!s.at("player_id").is_null()) slot.player = s.at("player_id").get<std::string>();
    slot.credit = s.at("credit").get<Credit>();
    slot.primary = cluster_or_throw(s.at("primary").get<std::string>());
    plan.slots.push_back(std::move(slot));
  }
  for (const auto& [name, st] : j.at("buckets").items()) {
    auto& b = plan.buckets[index_of(bucket_or_throw(name))];
    b.cap = st.at("cap").get<Credit>();
    b.remaining = st.at("remaining").get<Credit>();
    b.failure = st.value("failure", std::string());
  }
  return plan;
}

Json to_json(const PoolEntry& e, const NameLookup& name_of) {
  Json j = {{"player_id", e.player}, {"credit", e.credit}, {"primary", cluster_name(e.primary)}, {"score", e.score}};
  if (name_of) j["name"] = name_of(e.player);
  return j;
}

Json to_json(const ClusterRanking& r, const Rankings& all, const NameLookup& name_of) {
  Json entries = Json::array();
  std::size_t rank = 0;
  for (const auto& e : r.entries) {
    Json row = {{"rank", ++rank},
                {"player_id", e.player},
                {"career_score", e.career_score},
                {"current_score", e.current_score},
                {"final_score", e.final_rank_score}};
    if (name_of) row["name"] = name_of(e.player);
    if (r.cluster == ClusterId::Bowler) {
      row["labels"] = "B";
    } else if (auto it = all.labels.find(e.player); it != all.labels.end()) {
      row["labels"] = it->second.letters();
    }
    entries.push_back(std::move(row));
  }
  return {{"cluster", cluster_name(r.cluster)}, {"mean_current", r.mean_current}, {"entries", entries}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace iplrank
