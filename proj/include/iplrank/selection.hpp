#pragma once

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iplrank/credits.hpp"

namespace iplrank {

enum class Bucket { Wicketkeeper, Opener, Middle, Finisher, Bowler };
inline constexpr std::array<Bucket, 5> kBucketOrder = {Bucket::Wicketkeeper, Bucket::Opener, Bucket::Middle,
                                                       Bucket::Finisher, Bucket::Bowler};

std::string_view bucket_name(Bucket b);  // "wicketkeeper", "opener", ...
std::optional<Bucket> parse_bucket(std::string_view name);
/// The ranking cluster behind a bucket; nullopt for the wicketkeeper bucket.
std::optional<ClusterId> bucket_cluster(Bucket b);
inline std::size_t index_of(Bucket b) { return static_cast<std::size_t>(b); }

enum class Algorithm { V1, V2 };
std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct KeeperConstraints {
  bool distinct_primary = false;
  /// Required primary cluster per keeper slot (index 0 is slot 1).
  std::vector<std::optional<ClusterId>> required_cluster;

  bool any() const;
};

struct TeamConfig {
  int n = 15;
  Credit value = 135;
  std::array<int, 5> bucket_sizes = {2, 2, 3, 2, 6};  // indexed by Bucket
  KeeperConstraints keeper;
  std::size_t alternates_limit = 5;

  int size(Bucket b) const { return bucket_sizes[index_of(b)]; }
  /// Throws SelectionError(InvalidConfig) on a broken config.
  void validate() const;
};

struct PoolEntry {
  PlayerId player;
  Credit credit = 0;
  ClusterId primary = ClusterId::Opener;
  double score = 0;
};

/// Rank-ordered players of one bucket; credits are non-increasing along the list.
struct BucketPool {
  Bucket bucket = Bucket::Opener;
  std::vector<PoolEntry> entries;

  const PoolEntry* find(const PlayerId& p) const;
};

using Pools = std::array<BucketPool, 5>;  // indexed by Bucket

struct Slot {
  Bucket bucket = Bucket::Opener;
  std::size_t position = 0;  // 1-based within the bucket
  PlayerId player;           // empty when the slot is vacant
  Credit credit = 0;
  ClusterId primary = ClusterId::Opener;

  bool vacant() const { return player.empty(); }
  bool operator==(const Slot&) const = default;
};

struct BucketState {
  Credit cap = 0;
  Credit remaining = 0;
  std::string failure;  // set when a live repair could not refill the bucket

  bool operator==(const BucketState&) const = default;
};

struct TeamPlan {
  std::vector<Slot> slots;  // bucket order, then position
  std::array<BucketState, 5> buckets{};
  Credit value = 0;

  Credit total_spent() const;
  const Slot* find(const PlayerId& p) const;
  Slot* find(const PlayerId& p);
  bool contains(const PlayerId& p) const { return find(p) != nullptr; }
  std::vector<const Slot*> bucket_slots(Bucket b) const;
  bool operator==(const TeamPlan&) const = default;
};

class SelectionError : public std::runtime_error {
 public:
  enum class Kind { InvalidConfig, PoolTooSmall, BudgetInfeasible, DiversityInfeasible };

  SelectionError(Kind kind, std::optional<Bucket> bucket, const std::string& what)
      : std::runtime_error(what), kind_(kind), bucket_(bucket) {}

  Kind kind() const { return kind_; }
  std::optional<Bucket> bucket() const { return bucket_; }

 private:
  Kind kind_;
  std::optional<Bucket> bucket_;
};

std::string_view error_kind_name(SelectionError::Kind k);

/// cap_b = (value / n) * k_b. The value must be divisible by n.
std::array<Credit, 5> compute_caps(const TeamConfig& cfg);

/// Per-slot eligibility rules inside one bucket (used for wicketkeepers).
struct SlotRules {
  bool distinct_primary = false;
  std::vector<std::optional<ClusterId>> required_cluster;
};

struct BucketPick {
  PlayerId player;
  Credit credit = 0;
  ClusterId primary = ClusterId::Opener;
};

/// Greedy credit allocation with backtracking for one bucket.
///
/// Positions are filled left to right with the highest credit not above the
/// remaining budget. When the remainder drops below the cheapest eligible
/// credit, backward passes downgrade earlier positions one credit tier each
/// (swapping in the best-ranked available player of that tier) until the
/// current position becomes affordable. Players in `excluded` are never used.
std::vector<BucketPick> greedy_fill_bucket(const BucketPool& pool, int k, Credit cap,
                                           const std::set<PlayerId>& excluded = {},
                                           const SlotRules& rules = {});

/// Version 1: buckets filled independently in the order WK, O, M, F, B;
/// a player chosen in one bucket is unavailable to later buckets.
TeamPlan select_team_v1(const Pools& pools, const TeamConfig& cfg, const std::set<PlayerId>& unavailable = {});

/// Version 2: as v1, but wicketkeepers must have pairwise-distinct primary
/// clusters and honor any per-slot required cluster.
TeamPlan select_team_v2(const Pools& pools, const TeamConfig& cfg, const std::set<PlayerId>& unavailable = {});

TeamPlan select_team(Algorithm algorithm, const Pools& pools, const TeamConfig& cfg,
                     const std::set<PlayerId>& unavailable = {});

/// Rules that apply to keeper slots under the given algorithm.
SlotRules keeper_rules(Algorithm algorithm, const TeamConfig& cfg);

/// Unselected, available players of the lost player's bucket ordered by
/// distance from the slot credit (same credit first), then credit descending,
/// then rank. Keeper candidates that would break the keeper rules are skipped.
std::vector<PoolEntry> recommend_alternates(const TeamPlan& plan, const PlayerId& lost, const Pools& pools,
                                            const TeamConfig& cfg, const std::set<PlayerId>& unavailable = {},
                                            Algorithm algorithm = Algorithm::V1,
                                            std::optional<std::size_t> limit = std::nullopt);

/// Bucket pools from rankings, labels and credits. Batting buckets hold the
/// players carrying that label; keepers are credited by their primary cluster.
Pools build_pools(const Dataset& d, const Rankings& rankings, const CreditTable& credits);

/// `bucket,position,player_id,name,credit`
void write_plan_csv(std::ostream& out, const TeamPlan& plan,
                    const std::function<std::string(const PlayerId&)>& name_of);

}  // namespace iplrank
