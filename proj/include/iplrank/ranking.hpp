#pragma once

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iplrank/features.hpp"
#include "iplrank/kernels.hpp"

namespace iplrank {

enum class ClusterId { Opener, Middle, Finisher, Bowler };
inline constexpr std::array<ClusterId, 4> kAllClusters = {ClusterId::Opener, ClusterId::Middle,
                                                          ClusterId::Finisher, ClusterId::Bowler};
inline constexpr std::array<ClusterId, 3> kBattingClusters = {ClusterId::Opener, ClusterId::Middle,
                                                              ClusterId::Finisher};

std::string_view cluster_name(ClusterId c);  // "opener", "middle", ...
char cluster_letter(ClusterId c);            // 'O', 'M', 'F', 'B'
std::optional<ClusterId> parse_cluster(std::string_view name);
inline Discipline cluster_discipline(ClusterId c) {
  return c == ClusterId::Bowler ? Discipline::Bowling : Discipline::Batting;
}

/// Ordered feature weights. Batting profiles must total 100.
struct WeightProfile {
  std::vector<std::pair<Feature, double>> weights;

  /// Builds a profile from feature names; throws std::invalid_argument on an unknown name.
  static WeightProfile from_names(const std::vector<std::pair<std::string, double>>& named);

  double total() const;
  FeatureRow dense() const;
};

WeightProfile default_profile(ClusterId c);

/// Which pool statistic divides the current score in the experience term.
enum class MeanMode { Current, Career };

struct RankingConfig {
  std::array<WeightProfile, 4> profiles = {default_profile(ClusterId::Opener), default_profile(ClusterId::Middle),
                                           default_profile(ClusterId::Finisher), default_profile(ClusterId::Bowler)};
  MeanMode mean_mode = MeanMode::Current;
  kernels::Execution execution = kernels::Execution::Parallel;

  const WeightProfile& profile(ClusterId c) const { return profiles[static_cast<std::size_t>(c)]; }
  WeightProfile& profile(ClusterId c) { return profiles[static_cast<std::size_t>(c)]; }

  /// Throws std::invalid_argument when a profile has negative weights, uses a
  /// feature from the wrong discipline, or (batting) does not sum to 100.
  void validate() const;
};

struct ClusterScore {
  PlayerId player;
  ClusterId cluster = ClusterId::Opener;
  double career_score = 0;
  double current_score = 0;
  double final_rank_score = 0;
  double cost_xfact = 0;
};

struct ClusterRanking {
  ClusterId cluster = ClusterId::Opener;
  std::vector<ClusterScore> entries;  // final score desc, then player id asc
  double mean_current = 0;

  /// 1-based rank position, or nullopt when the player is not ranked here.
  std::optional<std::size_t> position(const PlayerId& id) const;
  const ClusterScore* find(const PlayerId& id) const;
};

struct PlayerLabels {
  PlayerId player;
  ClusterId primary = ClusterId::Opener;
  std::vector<ClusterId> labels;  // in O, M, F order; always contains primary

  std::string letters() const;
};

/// Per-player feature rows for one discipline over a candidate pool.
/// Batting cost columns are normalized over the pool, separately per view.
struct PoolFeatures {
  std::vector<PlayerId> players;  // sorted by id
  std::vector<FeatureRow> career;
  std::vector<FeatureRow> current;
  std::vector<double> cost_xfact;
};

PoolFeatures compute_pool_features(const Dataset& d, Discipline discipline, std::vector<PlayerId> candidates,
                                   kernels::Execution execution = kernels::Execution::Parallel);

/// Weighted scores of one player on the career and current views.
std::pair<double, double> cluster_score(const FeatureRow& career, const FeatureRow& current,
                                        const WeightProfile& profile, ClusterId cluster);

double final_rank_score(double career, double current, double cost_xfact, double mean_current);

/// Sorts entries into ranking order and fills in mean_current.
ClusterRanking make_ranking(ClusterId cluster, std::vector<ClusterScore> entries);

ClusterRanking rank_cluster(const Dataset& d, ClusterId cluster, const std::vector<PlayerId>& candidates,
                            const RankingConfig& cfg = {});

/// Primary label is the cluster with the highest final score (ties go to the
/// better rank position); every cluster where the player's rank position is
/// at least as good as in the primary cluster is added.
std::map<PlayerId, PlayerLabels> assign_labels(const ClusterRanking& openers, const ClusterRanking& middles,
                                               const ClusterRanking& finishers);

struct Rankings {
  std::array<ClusterRanking, 4> clusters;
  std::map<PlayerId, PlayerLabels> labels;

  const ClusterRanking& at(ClusterId c) const { return clusters[static_cast<std::size_t>(c)]; }
};

/// Ranks the batting pool in all three batting clusters and the bowling pool.
Rankings rank_all(const Dataset& d, const RankingConfig& cfg = {});

/// `cluster,rank,player_id,name,career_score,current_score,final_score,labels`
void write_ranking_csv(std::ostream& out, const Dataset& d, const ClusterRanking& ranking,
                       const std::map<PlayerId, PlayerLabels>& labels, bool header = true);

}  // namespace iplrank
