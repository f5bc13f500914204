#pragma once

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "iplrank/ranking.hpp"

namespace iplrank {

using Credit = int;

struct CreditConfig {
  std::vector<Credit> group_values = {10, 9, 8, 7};  // strictly descending, positive

  std::size_t group_count() const { return group_values.size(); }
  void validate() const;  // throws std::invalid_argument
};

/// Sizes of the credit groups for a cluster of `cluster_size` ranked players.
///
/// Groups hold ceil(c_n / c_p) players each with the last group taking what is
/// left. When that rule would leave a trailing group empty although
/// c_n >= c_p, sizes are balanced instead (the first c_n mod c_p groups get one
/// extra player) so every credit value is used.
std::vector<std::size_t> credit_group_sizes(std::size_t cluster_size, std::size_t group_count);

struct CreditEntry {
  PlayerId player;
  std::size_t rank = 0;  // 1-based
  Credit credit = 0;
};

struct ClusterCredits {
  ClusterId cluster = ClusterId::Opener;
  std::vector<CreditEntry> entries;           // rank order
  std::vector<std::size_t> group_boundaries;  // first rank (1-based) of each non-empty group
};

ClusterCredits assign_credits(const ClusterRanking& ranking, const CreditConfig& cfg = {});

class CreditTable {
 public:
  void add(ClusterCredits credits);
  const ClusterCredits& cluster(ClusterId c) const;
  std::optional<Credit> credit(ClusterId c, const PlayerId& p) const;

 private:
  std::map<ClusterId, ClusterCredits> clusters_;
  std::map<std::pair<ClusterId, PlayerId>, Credit> lookup_;
};

CreditTable build_credit_table(const Rankings& rankings, const CreditConfig& cfg = {});

/// `cluster,rank,player_id,credit`
void write_credits_csv(std::ostream& out, const ClusterCredits& credits, bool header = true);

}  // namespace iplrank
