#include "iplrank/credits.hpp"

#include <algorithm>
#include <stdexcept>

namespace iplrank {

void CreditConfig::validate() const {
  if (group_values.empty()) throw std::invalid_argument("credit config needs at least one group");
  for (std::size_t i = 0; i < group_values.size(); ++i) {
    if (group_values[i] <= 0) throw std::invalid_argument("credit values must be positive");
    if (i > 0 && group_values[i] >= group_values[i - 1]) {
      throw std::invalid_argument("credit values must be strictly descending");
    }
  }
}

std::vector<std::size_t> credit_group_sizes(std::size_t cluster_size, std::size_t group_count) {
  if (group_count == 0) throw std::invalid_argument("group_count must be positive");
  const std::size_t g = (cluster_size + group_count - 1) / group_count;
  std::vector<std::size_t> sizes;
  std::size_t left = cluster_size;
  for (std::size_t i = 0; i < group_count; ++i) {
    const auto take = std::min(g, left);
    sizes.push_back(take);
    left -= take;
  }
  const bool gap = std::find(sizes.begin(), sizes.end(), 0) != sizes.end();
  if (cluster_size >= group_count && gap) {
    const auto base = cluster_size / group_count;
    const auto extra = cluster_size % group_count;
    for (std::size_t i = 0; i < group_count; ++i) sizes[i] = base + (i < extra ? 1 : 0);
  }
  return sizes;
}

ClusterCredits assign_credits(const ClusterRanking& ranking, const CreditConfig& cfg) {
  cfg.validate();
  ClusterCredits out;
  out.cluster = ranking.cluster;
  const auto sizes = credit_group_sizes(ranking.entries.size(), cfg.group_count());
  std::size_t rank = 0;
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    if (sizes[g] == 0) continue;
    out.group_boundaries.push_back(rank + 1);
    for (std::size_t k = 0; k < sizes[g]; ++k, ++rank) {
      out.entries.push_back({ranking.entries[rank].player, rank + 1, cfg.group_values[g]});
    }
  }
  return out;
}

void CreditTable::add(ClusterCredits credits) {
  for (const auto& e : credits.entries) lookup_[{credits.cluster, e.player}] = e.credit;
  clusters_[credits.cluster] = std::move(credits);
}

const ClusterCredits& CreditTable::cluster(ClusterId c) const {
  auto it = clusters_.find(c);
  if (it == clusters_.end()) throw std::out_of_range("no credits for cluster " + std::string(cluster_name(c)));
  return it->second;
}

std::optional<Credit> CreditTable::credit(ClusterId c, const PlayerId& p) const {
  auto it = lookup_.find({c, p});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

CreditTable build_credit_table(const Rankings& rankings, const CreditConfig& cfg) {
  CreditTable t;
  for (auto c : kAllClusters) t.add(assign_credits(rankings.at(c), cfg));
  return t;
}

void write_credits_csv(std::ostream& out, const ClusterCredits& credits, bool header) {
  if (header) out << "cluster,rank,player_id,credit\n";
  for (const auto& e : credits.entries) {
    out << cluster_name(credits.cluster) << ',' << e.rank << ',' << e.player << ',' << e.credit << '\n';
  }
}

}  // namespace iplrank
