#pragma once

// Structured-document forms of configs and results, shared by the CLI and
// the HTTP service.

#include <functional>
#include <string>

#include "json.hpp"

#include "iplrank/engine.hpp"

namespace iplrank {

using Json = nlohmann::json;
using NameLookup = std::function<std::string(const PlayerId&)>;

/// {"n", "value", "buckets": {"wicketkeeper": 2, ...},
///  "keeper_constraints": {"distinct_primary": bool, "required_clusters": [null, "opener"]},
///  "alternates_limit": 5}
/// Missing keys keep the defaults. Throws std::invalid_argument.
TeamConfig team_config_from_json(const Json& j);
Json to_json(const TeamConfig& cfg);

/// {"weights": {"opener": {"cost_strike_rate": 30, ...}, ...},
///  "mean": "current" | "career", "credit_groups": [10, 9, 8, 7]}
EngineConfig engine_config_from_json(const Json& j);

Json to_json(const TeamPlan& plan, const NameLookup& name_of = {});
TeamPlan team_plan_from_json(const Json& j);

Json to_json(const PoolEntry& e, const NameLookup& name_of = {});
Json to_json(const ClusterRanking& r, const Rankings& all, const NameLookup& name_of = {});

Json read_json_file(const std::string& path);

}  // namespace iplrank
