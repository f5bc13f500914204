#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "iplrank/selection.hpp"

namespace iplrank::testing {

inline std::string data_dir() { return std::string(IPLRANK_SOURCE_DIR) + "/data/synthetic"; }
inline std::string golden_dir() { return std::string(IPLRANK_SOURCE_DIR) + "/tests/golden"; }

/// `per_tier` players at every credit value, best-ranked first. Ids look like
/// "<prefix>-10-1".
inline BucketPool ample_pool(Bucket bucket, int per_tier, ClusterId primary,
                             const std::vector<Credit>& tiers = {10, 9, 8, 7}, const std::string& prefix = "") {
  BucketPool pool;
  pool.bucket = bucket;
  const std::string tag = prefix.empty() ? std::string(bucket_name(bucket)) : prefix;
  double score = 1000;
  for (auto credit : tiers) {
    for (int i = 1; i <= per_tier; ++i) {
      pool.entries.push_back({tag + "-" + std::to_string(credit) + "-" + std::to_string(i), credit, primary, score});
      score -= 1;
    }
  }
  return pool;
}

inline Pools ample_pools(int per_tier) {
  Pools pools;
  pools[index_of(Bucket::Wicketkeeper)] = ample_pool(Bucket::Wicketkeeper, per_tier, ClusterId::Finisher);
  pools[index_of(Bucket::Opener)] = ample_pool(Bucket::Opener, per_tier, ClusterId::Opener);
  pools[index_of(Bucket::Middle)] = ample_pool(Bucket::Middle, per_tier, ClusterId::Middle);
  pools[index_of(Bucket::Finisher)] = ample_pool(Bucket::Finisher, per_tier, ClusterId::Finisher);
  pools[index_of(Bucket::Bowler)] = ample_pool(Bucket::Bowler, per_tier, ClusterId::Bowler);
  return pools;
}

inline std::vector<Credit> credit_vector(const TeamPlan& plan, Bucket b) {
  std::vector<Credit> out;
  for (const auto* s : plan.bucket_slots(b)) out.push_back(s->credit);
  return out;
}

inline std::vector<Credit> credit_vector(const std::vector<BucketPick>& picks) {
  std::vector<Credit> out;
  for (const auto& p : picks) out.push_back(p.credit);
  return out;
}

struct CsvTriple {
  std::string players = "id,name,is_wicketkeeper,is_retired\n";
  std::string batting = "id,season,innings,not_outs,runs,balls,hundreds,fifties,fours,sixes\n";
  std::string bowling = "id,season,innings,balls,runs_conceded,wickets,four_hauls,five_hauls\n";

  Dataset load(std::optional<std::int64_t> league = std::nullopt) const {
    std::istringstream p(players), b(batting), w(bowling);
    return load_dataset(b, w, p, league);
  }
};

}  // namespace iplrank::testing
