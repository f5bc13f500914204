#include "iplrank/selection.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace iplrank {

std::string_view bucket_name(Bucket b) {
  switch (b) {
    case Bucket::Wicketkeeper: return "wicketkeeper";
    case Bucket::Opener: return "opener";
    case Bucket::Middle: return "middle";
    case Bucket::Finisher: return "finisher";
    case Bucket::Bowler: return "bowler";
  }
  return "?";
}

std::optional<Bucket> parse_bucket(std::string_view name) {
  for (auto b : kBucketOrder) {
    if (bucket_name(b) == name) return b;
  }
  return std::nullopt;
}

std::optional<ClusterId> bucket_cluster(Bucket b) {
  switch (b) {
    case Bucket::Wicketkeeper: return std::nullopt;
    case Bucket::Opener: return ClusterId::Opener;
    case Bucket::Middle: return ClusterId::Middle;
    case Bucket::Finisher: return ClusterId::Finisher;
    case Bucket::Bowler: return ClusterId::Bowler;
  }
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) { return a == Algorithm::V1 ? "v1" : "v2"; }

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "v1") return Algorithm::V1;
  if (name == "v2") return Algorithm::V2;
  return std::nullopt;
}

std::string_view error_kind_name(SelectionError::Kind k) {
  switch (k) {
    case SelectionError::Kind::InvalidConfig: return "invalid_config";
    case SelectionError::Kind::PoolTooSmall: return "pool_too_small";
    case SelectionError::Kind::BudgetInfeasible: return "budget_infeasible";
    case SelectionError::Kind::DiversityInfeasible: return "diversity_infeasible";
  }
  return "?";
}

bool KeeperConstraints::any() const {
  return distinct_primary ||
         std::any_of(required_cluster.begin(), required_cluster.end(), [](const auto& c) { return c.has_value(); });
}

void TeamConfig::validate() const {
  auto bad = [](const std::string& msg) { throw SelectionError(SelectionError::Kind::InvalidConfig, {}, msg); };
  if (n <= 0) bad("team size n must be positive");
  if (value <= 0) bad("team value must be positive");
  int sum = 0;
  for (auto b : kBucketOrder) {
    if (size(b) < 0) bad("bucket size for " + std::string(bucket_name(b)) + " must be ≥ 0");
    sum += size(b);
  }
  if (sum != n) {
    std::ostringstream msg;
    msg << "bucket sizes sum to " << sum << " but n = " << n;
    bad(msg.str());
  }
  if (keeper.required_cluster.size() > static_cast<std::size_t>(size(Bucket::Wicketkeeper))) {
    bad("more required keeper clusters than wicketkeeper slots");
  }
  for (const auto& c : keeper.required_cluster) {
    if (c == ClusterId::Bowler) bad("a keeper slot can only require a batting cluster");
  }
}

const PoolEntry* BucketPool::find(const PlayerId& p) const {
  for (const auto& e : entries) {
    if (e.player == p) return &e;
  }
  return nullptr;
}

Credit TeamPlan::total_spent() const {
  Credit total = 0;
  for (const auto& s : slots) total += s.credit;
  return total;
}

const Slot* TeamPlan::find(const PlayerId& p) const {
  for (const auto& s : slots) {
    if (!s.vacant() && s.player == p) return &s;
  }
  return nullptr;
}

Slot* TeamPlan::find(const PlayerId& p) {
  for (auto& s : slots) {
    if (!s.vacant() && s.player == p) return &s;
  }
  return nullptr;
}

std::vector<const Slot*> TeamPlan::bucket_slots(Bucket b) const {
  std::vector<const Slot*> out;
  for (const auto& s : slots) {
    if (s.bucket == b) out.push_back(&s);
  }
  return out;
}

std::array<Credit, 5> compute_caps(const TeamConfig& cfg) {
  cfg.validate();
  if (cfg.value % cfg.n != 0) {
    const Credit lower = cfg.value / cfg.n * cfg.n;
    std::ostringstream msg;
    msg << "value " << cfg.value << " is not divisible by n = " << cfg.n << "; nearest feasible values are ";
    if (lower > 0) msg << lower << " and ";
    msg << lower + cfg.n;
    throw SelectionError(SelectionError::Kind::InvalidConfig, {}, msg.str());
  }
  const Credit unit = cfg.value / cfg.n;
  std::array<Credit, 5> caps{};
  for (auto b : kBucketOrder) caps[index_of(b)] = unit * cfg.size(b);
  return caps;
}

namespace {

// Working state of one bucket fill: which pool entries occupy which slots.
class BucketFiller {
 public:
  BucketFiller(const BucketPool& pool, const std::set<PlayerId>& excluded, const SlotRules& rules)
      : pool_(pool), rules_(rules), used_(pool.entries.size(), false), excluded_(pool.entries.size(), false) {
    for (std::size_t i = 0; i < pool.entries.size(); ++i) excluded_[i] = excluded.count(pool.entries[i].player) != 0;
  }

  std::size_t available_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < used_.size(); ++i) n += free(i) ? 1 : 0;
    return n;
  }

  // Cheapest credit among players not yet used.
  std::optional<Credit> min_remaining() const {
    std::optional<Credit> m;
    for (std::size_t i = 0; i < used_.size(); ++i) {
      if (free(i) && (!m || pool_.entries[i].credit < *m)) m = pool_.entries[i].credit;
    }
    return m;
  }

  // Cheapest credit a player eligible for `slot` costs.
  std::optional<Credit> min_eligible(std::size_t slot) const {
    std::optional<Credit> m;
    for (std::size_t i = 0; i < used_.size(); ++i) {
      if (eligible(i, slot) && (!m || pool_.entries[i].credit < *m)) m = pool_.entries[i].credit;
    }
    return m;
  }

  // Best-ranked eligible player holding the highest credit in [floor, ceiling].
  std::optional<std::size_t> best_between(std::size_t slot, Credit floor, Credit ceiling) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < used_.size(); ++i) {
      const auto c = pool_.entries[i].credit;
      if (c < floor || c > ceiling || !eligible(i, slot)) continue;
      if (!best || c > pool_.entries[*best].credit) best = i;
    }
    return best;
  }

  void place(std::size_t slot, std::size_t entry) {
    if (slot == slots_.size()) slots_.push_back(entry);
    else {
      used_[slots_[slot]] = false;
      slots_[slot] = entry;
    }
    used_[entry] = true;
  }

  std::size_t filled() const { return slots_.size(); }
  const PoolEntry& at(std::size_t slot) const { return pool_.entries[slots_[slot]]; }

 private:
  bool free(std::size_t i) const { return !used_[i] && !excluded_[i]; }

  bool eligible(std::size_t i, std::size_t slot) const {
    if (!free(i)) return false;
    const auto primary = pool_.entries[i].primary;
    if (slot < rules_.required_cluster.size() && rules_.required_cluster[slot] &&
        *rules_.required_cluster[slot] != primary) {
      return false;
    }
    if (rules_.distinct_primary) {
      for (std::size_t j = 0; j < slots_.size(); ++j) {
        if (j != slot && pool_.entries[slots_[j]].primary == primary) return false;
      }
    }
    return true;
  }

  const BucketPool& pool_;
  const SlotRules& rules_;
  std::vector<bool> used_;
  std::vector<bool> excluded_;
  std::vector<std::size_t> slots_;
};

std::string bucket_label(Bucket b) { return "bucket '" + std::string(bucket_name(b)) + "'"; }

}  // namespace

std::vector<BucketPick> greedy_fill_bucket(const BucketPool& pool, int k, Credit cap,
                                           const std::set<PlayerId>& excluded, const SlotRules& rules) {
  if (k <= 0) return {};
  BucketFiller filler(pool, excluded, rules);
  if (filler.available_count() < static_cast<std::size_t>(k)) {
    std::ostringstream msg;
    msg << bucket_label(pool.bucket) << " needs " << k << " players but only " << filler.available_count()
        << " are available";
    throw SelectionError(SelectionError::Kind::PoolTooSmall, pool.bucket, msg.str());
  }

  Credit rem = cap;
  for (std::size_t pos = 0; pos < static_cast<std::size_t>(k); ++pos) {
    auto target = filler.min_eligible(pos);
    if (!target) {
      std::ostringstream msg;
      msg << bucket_label(pool.bucket) << ": no available player satisfies the constraints of position " << pos + 1;
      throw SelectionError(SelectionError::Kind::DiversityInfeasible, pool.bucket, msg.str());
    }
    while (rem < *target) {
      bool progressed = false;
      for (std::size_t j = pos; j-- > 0 && rem < *target;) {
        const auto floor = filler.min_remaining().value_or(*target);
        const auto current = filler.at(j).credit;
        if (current - 1 < floor) continue;
        if (auto lower = filler.best_between(j, floor, current - 1)) {
          filler.place(j, *lower);
          rem += current - filler.at(j).credit;
          progressed = true;
        }
        target = filler.min_eligible(pos);
        if (!target) {
          throw SelectionError(SelectionError::Kind::DiversityInfeasible, pool.bucket,
                               bucket_label(pool.bucket) + ": downgrades left no eligible player");
        }
      }
      if (!progressed && rem < *target) {
        std::ostringstream msg;
        msg << bucket_label(pool.bucket) << " is infeasible: cap " << cap << " cannot cover " << k
            << " players (position " << pos + 1 << " needs " << *target << ", " << rem
            << " left after all downgrades)";
        throw SelectionError(SelectionError::Kind::BudgetInfeasible, pool.bucket, msg.str());
      }
    }
    const auto pick = filler.best_between(pos, 0, rem);
    filler.place(pos, *pick);
    rem -= filler.at(pos).credit;
  }

  std::vector<BucketPick> out;
  for (std::size_t s = 0; s < filler.filled(); ++s) {
    const auto& e = filler.at(s);
    out.push_back({e.player, e.credit, e.primary});
  }
  return out;
}

SlotRules keeper_rules(Algorithm algorithm, const TeamConfig& cfg) {
  if (algorithm == Algorithm::V1) return {};
  return {true, cfg.keeper.required_cluster};
}

namespace {

TeamPlan select_with(const Pools& pools, const TeamConfig& cfg, const std::set<PlayerId>& unavailable,
                     Algorithm algorithm) {
  const auto caps = compute_caps(cfg);
  TeamPlan plan;
  plan.value = cfg.value;
  std::set<PlayerId> excluded = unavailable;
  const auto keepers = keeper_rules(algorithm, cfg);
  for (auto b : kBucketOrder) {
    auto& state = plan.buckets[index_of(b)];
    state.cap = caps[index_of(b)];
    state.remaining = state.cap;
    const auto k = cfg.size(b);
    if (k == 0) continue;
    const auto& rules = b == Bucket::Wicketkeeper ? keepers : SlotRules{};
    const auto picks = greedy_fill_bucket(pools[index_of(b)], k, state.cap, excluded, rules);
    for (std::size_t i = 0; i < picks.size(); ++i) {
      plan.slots.push_back({b, i + 1, picks[i].player, picks[i].credit, picks[i].primary});
      state.remaining -= picks[i].credit;
      excluded.insert(picks[i].player);
    }
  }
  return plan;
}

}  // namespace

TeamPlan select_team_v1(const Pools& pools, const TeamConfig& cfg, const std::set<PlayerId>& unavailable) {
  return select_with(pools, cfg, unavailable, Algorithm::V1);
}

TeamPlan select_team_v2(const Pools& pools, const TeamConfig& cfg, const std::set<PlayerId>& unavailable) {
  return select_with(pools, cfg, unavailable, Algorithm::V2);
}

TeamPlan select_team(Algorithm algorithm, const Pools& pools, const TeamConfig& cfg,
                     const std::set<PlayerId>& unavailable) {
  return select_with(pools, cfg, unavailable, algorithm);
}

std::vector<PoolEntry> recommend_alternates(const TeamPlan& plan, const PlayerId& lost, const Pools& pools,
                                            const TeamConfig& cfg, const std::set<PlayerId>& unavailable,
                                            Algorithm algorithm, std::optional<std::size_t> limit) {
  const Slot* slot = plan.find(lost);
  if (!slot) throw std::invalid_argument("player " + lost + " is not in the plan");

  std::vector<ClusterId> other_keepers;
  if (slot->bucket == Bucket::Wicketkeeper) {
    for (const auto* s : plan.bucket_slots(Bucket::Wicketkeeper)) {
      if (s != slot && !s->vacant()) other_keepers.push_back(s->primary);
    }
  }
  const auto rules = keeper_rules(algorithm, cfg);
  const auto& pool = pools[index_of(slot->bucket)];

  struct Ranked {
    std::size_t index;
    const PoolEntry* entry;
  };
  std::vector<Ranked> candidates;
  for (std::size_t i = 0; i < pool.entries.size(); ++i) {
    const auto& e = pool.entries[i];
    if (e.player == lost || plan.contains(e.player) || unavailable.count(e.player)) continue;
    if (slot->bucket == Bucket::Wicketkeeper) {
      const auto pos = slot->position - 1;
      if (pos < rules.required_cluster.size() && rules.required_cluster[pos] &&
          *rules.required_cluster[pos] != e.primary) {
        continue;
      }
      if (rules.distinct_primary &&
          std::find(other_keepers.begin(), other_keepers.end(), e.primary) != other_keepers.end()) {
        continue;
      }
    }
    candidates.push_back({i, &e});
  }
  const Credit want = slot->credit;
  std::stable_sort(candidates.begin(), candidates.end(), [want](const Ranked& a, const Ranked& b) {
    const auto da = std::abs(a.entry->credit - want);
    const auto db = std::abs(b.entry->credit - want);
    if (da != db) return da < db;
    if (a.entry->credit != b.entry->credit) return a.entry->credit > b.entry->credit;
    return a.index < b.index;
  });

  const auto cap = limit.value_or(cfg.alternates_limit);
  std::vector<PoolEntry> out;
  for (const auto& c : candidates) {
    if (out.size() >= cap) break;
    out.push_back(*c.entry);
  }
  return out;
}

Pools build_pools(const Dataset& d, const Rankings& rankings, const CreditTable& credits) {
  Pools pools;
  for (auto b : kBucketOrder) pools[index_of(b)].bucket = b;

  for (auto c : kBattingClusters) {
    auto& pool = pools[static_cast<std::size_t>(c) + 1];
    for (const auto& e : rankings.at(c).entries) {
      auto it = rankings.labels.find(e.player);
      if (it == rankings.labels.end()) continue;
      const auto& labels = it->second.labels;
      if (std::find(labels.begin(), labels.end(), c) == labels.end()) continue;
      pool.entries.push_back({e.player, *credits.credit(c, e.player), it->second.primary, e.final_rank_score});
    }
  }

  auto& bowlers = pools[index_of(Bucket::Bowler)];
  for (const auto& e : rankings.at(ClusterId::Bowler).entries) {
    bowlers.entries.push_back({e.player, *credits.credit(ClusterId::Bowler, e.player), ClusterId::Bowler,
                               e.final_rank_score});
  }

  auto& keepers = pools[index_of(Bucket::Wicketkeeper)];
  for (const auto& [id, labels] : rankings.labels) {
    if (!d.player(id).is_wicketkeeper) continue;
    const auto* s = rankings.at(labels.primary).find(id);
    keepers.entries.push_back({id, *credits.credit(labels.primary, id), labels.primary, s->final_rank_score});
  }
  std::sort(keepers.entries.begin(), keepers.entries.end(), [](const PoolEntry& a, const PoolEntry& b) {
    if (a.credit != b.credit) return a.credit > b.credit;
    if (a.score != b.score) return a.score > b.score;
    return a.player < b.player;
  });
  return pools;
}

void write_plan_csv(std::ostream& out, const TeamPlan& plan,
                    const std::function<std::string(const PlayerId&)>& name_of) {
  out << "bucket,position,player_id,name,credit\n";
  for (const auto& s : plan.slots) {
    out << bucket_name(s.bucket) << ',' << s.position << ',' << s.player << ','
        << (s.vacant() ? std::string() : name_of(s.player)) << ',' << s.credit << '\n';
  }
}

}  // namespace iplrank
