#include "iplrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <stdexcept>

namespace iplrank {

std::string_view cluster_name(ClusterId c) {
  switch (c) {
    case ClusterId::Opener: return "opener";
    case ClusterId::Middle: return "middle";
    case ClusterId::Finisher: return "finisher";
    case ClusterId::Bowler: return "bowler";
  }
  return "?";
}

char cluster_letter(ClusterId c) { return "OMFB"[static_cast<std::size_t>(c)]; }

std::optional<ClusterId> parse_cluster(std::string_view name) {
  for (auto c : kAllClusters) {
    if (cluster_name(c) == name) return c;
  }
  return std::nullopt;
}

WeightProfile WeightProfile::from_names(const std::vector<std::pair<std::string, double>>& named) {
  WeightProfile p;
  for (const auto& [name, w] : named) {
    auto f = parse_feature(name);
    if (!f) throw std::invalid_argument("weight profile references unknown feature '" + name + "'");
    p.weights.emplace_back(*f, w);
  }
  return p;
}

double WeightProfile::total() const {
  double s = 0;
  for (const auto& [f, w] : weights) s += w;
  return s;
}

FeatureRow WeightProfile::dense() const {
  FeatureRow row{};
  for (const auto& [f, w] : weights) row[static_cast<std::size_t>(f)] += w;
  return row;
}

WeightProfile default_profile(ClusterId c) {
  switch (c) {
    case ClusterId::Opener:
      return {{{Feature::CostStrikeRate, 30},
               {Feature::CostAverage, 30},
               {Feature::HalfCenturiesPerInnings, 20},
               {Feature::CostRunWicket, 10},
               {Feature::CostHardHitting, 10}}};
    case ClusterId::Middle:
      return {{{Feature::CostStrikeRate, 20},
               {Feature::CostAverage, 30},
               {Feature::HalfCenturiesPerInnings, 10},
               {Feature::CostRunWicket, 25},
               {Feature::CostHardHitting, 15}}};
    case ClusterId::Finisher:
      return {{{Feature::CostStrikeRate, 40},
               {Feature::CostHardHitting, 40},
               {Feature::NotOutFraction, 5},
               {Feature::CostRunWicket, 15}}};
    case ClusterId::Bowler:
      // Raw (not cost-normalized) bowling features; totals 90.
      return {{{Feature::WicketPerBall, 35},
               {Feature::Consistency, 35},
               {Feature::InvAverage, 10},
               {Feature::InvEconomy, 10}}};
  }
  return {};
}

void RankingConfig::validate() const {
  for (auto c : kAllClusters) {
    const auto& p = profile(c);
    for (const auto& [f, w] : p.weights) {
      if (w < 0) throw std::invalid_argument(std::string(cluster_name(c)) + " profile has a negative weight");
      if (feature_discipline(f) != cluster_discipline(c)) {
        throw std::invalid_argument(std::string(cluster_name(c)) + " profile references unknown feature '" +
                                    std::string(feature_name(f)) + "'");
      }
    }
    if (c != ClusterId::Bowler && std::abs(p.total() - 100.0) > 1e-9) {
      throw std::invalid_argument(std::string(cluster_name(c)) + " profile weights must sum to 100");
    }
  }
}

std::optional<std::size_t> ClusterRanking::position(const PlayerId& id) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].player == id) return i + 1;
  }
  return std::nullopt;
}

const ClusterScore* ClusterRanking::find(const PlayerId& id) const {
  for (const auto& e : entries) {
    if (e.player == id) return &e;
  }
  return nullptr;
}

std::string PlayerLabels::letters() const {
  std::string s;
  for (auto c : labels) s += cluster_letter(c);
  return s;
}

PoolFeatures compute_pool_features(const Dataset& d, Discipline discipline, std::vector<PlayerId> candidates,
                                   kernels::Execution execution) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  PoolFeatures pf;
  const auto n = candidates.size();
  pf.career.resize(n);
  pf.current.resize(n);

  if (discipline == Discipline::Batting) {
    std::vector<BattingSeasonRecord> career, current;
    career.reserve(n);
    current.reserve(n);
    for (const auto& id : candidates) {
      career.push_back(d.career_aggregate(id).batting);
      current.push_back(d.current_season_record(id).batting);
    }
    kernels::batting_rows(execution, career, pf.career);
    kernels::batting_rows(execution, current, pf.current);
    static constexpr std::array<Feature, 4> kCosted = {Feature::CostStrikeRate, Feature::CostAverage,
                                                       Feature::CostRunWicket, Feature::CostHardHitting};
    kernels::normalize_columns(execution, pf.career, kCosted);
    kernels::normalize_columns(execution, pf.current, kCosted);
  } else {
    std::vector<BowlingSeasonRecord> career, current;
    career.reserve(n);
    current.reserve(n);
    for (const auto& id : candidates) {
      career.push_back(d.career_aggregate(id).bowling);
      current.push_back(d.current_season_record(id).bowling);
    }
    kernels::bowling_rows(execution, career, pf.career);
    kernels::bowling_rows(execution, current, pf.current);
  }
  pf.cost_xfact = cost_xfacts(d, candidates, discipline);
  pf.players = std::move(candidates);
  return pf;
}

std::pair<double, double> cluster_score(const FeatureRow& career, const FeatureRow& current,
                                        const WeightProfile& profile, ClusterId cluster) {
  for (const auto& [f, w] : profile.weights) {
    if (feature_discipline(f) != cluster_discipline(cluster)) {
      throw std::invalid_argument("profile for " + std::string(cluster_name(cluster)) +
                                  " references unknown feature '" + std::string(feature_name(f)) + "'");
    }
  }
  const auto w = profile.dense();
  double out[2];
  kernels::weighted_scores_serial(std::span(&career, 1), w, std::span(&out[0], 1));
  kernels::weighted_scores_serial(std::span(&current, 1), w, std::span(&out[1], 1));
  return {out[0], out[1]};
}

double final_rank_score(double career, double current, double cost_xfact, double mean_current) {
  double out = 0;
  kernels::final_scores_serial(std::span(&career, 1), std::span(&current, 1), std::span(&cost_xfact, 1),
                               mean_current, std::span(&out, 1));
  return out;
}

ClusterRanking make_ranking(ClusterId cluster, std::vector<ClusterScore> entries) {
  ClusterRanking r;
  r.cluster = cluster;
  double sum = 0;
  for (const auto& e : entries) sum += e.current_score;
  r.mean_current = entries.empty() ? 0.0 : sum / static_cast<double>(entries.size());
  std::sort(entries.begin(), entries.end(), [](const ClusterScore& a, const ClusterScore& b) {
    if (a.final_rank_score != b.final_rank_score) return a.final_rank_score > b.final_rank_score;
    return a.player < b.player;
  });
  r.entries = std::move(entries);
  return r;
}

namespace {

ClusterRanking rank_from_features(const PoolFeatures& pf, ClusterId cluster, const RankingConfig& cfg) {
  const auto n = pf.players.size();
  const auto weights = cfg.profile(cluster).dense();
  std::vector<double> career(n), current(n), final(n);
  kernels::weighted_scores(cfg.execution, pf.career, weights, career);
  kernels::weighted_scores(cfg.execution, pf.current, weights, current);

  // Serial sum keeps the mean bit-identical across runs.
  const auto& basis = cfg.mean_mode == MeanMode::Current ? current : career;
  double sum = 0;
  for (double v : basis) sum += v;
  const double mean = sum / static_cast<double>(n);
  kernels::final_scores(cfg.execution, career, current, pf.cost_xfact, mean, final);

  std::vector<ClusterScore> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back({pf.players[i], cluster, career[i], current[i], final[i], pf.cost_xfact[i]});
  }
  auto ranking = make_ranking(cluster, std::move(entries));
  return ranking;
}

}  // namespace

ClusterRanking rank_cluster(const Dataset& d, ClusterId cluster, const std::vector<PlayerId>& candidates,
                            const RankingConfig& cfg) {
  if (candidates.empty()) {
    throw std::invalid_argument("rank_cluster: empty candidate pool for " + std::string(cluster_name(cluster)));
  }
  cfg.validate();
  const auto pf = compute_pool_features(d, cluster_discipline(cluster), candidates, cfg.execution);
  return rank_from_features(pf, cluster, cfg);
}

std::map<PlayerId, PlayerLabels> assign_labels(const ClusterRanking& openers, const ClusterRanking& middles,
                                               const ClusterRanking& finishers) {
  const std::array<const ClusterRanking*, 3> rankings = {&openers, &middles, &finishers};
  std::map<PlayerId, PlayerLabels> out;
  for (const auto* ranking : rankings) {
    for (const auto& e : ranking->entries) {
      if (out.count(e.player)) continue;
      struct Standing {
        ClusterId cluster;
        double score;
        std::size_t pos;
      };
      std::vector<Standing> standings;
      for (std::size_t k = 0; k < 3; ++k) {
        const auto* s = rankings[k]->find(e.player);
        if (!s) {
          throw std::invalid_argument("assign_labels: " + e.player + " missing from the " +
                                      std::string(cluster_name(kBattingClusters[k])) + " ranking");
        }
        standings.push_back({kBattingClusters[k], s->final_rank_score, *rankings[k]->position(e.player)});
      }
      const auto best = std::min_element(standings.begin(), standings.end(), [](const auto& a, const auto& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.pos < b.pos;
      });
      PlayerLabels labels{e.player, best->cluster, {}};
      for (const auto& s : standings) {
        if (s.pos <= best->pos) labels.labels.push_back(s.cluster);
      }
      out.emplace(e.player, std::move(labels));
    }
  }
  return out;
}

Rankings rank_all(const Dataset& d, const RankingConfig& cfg) {
  cfg.validate();
  Rankings r;
  const auto batsmen = d.batting_candidates();
  if (!batsmen.empty()) {
    const auto pf = compute_pool_features(d, Discipline::Batting, batsmen, cfg.execution);
    for (auto c : kBattingClusters) r.clusters[static_cast<std::size_t>(c)] = rank_from_features(pf, c, cfg);
    r.labels = assign_labels(r.at(ClusterId::Opener), r.at(ClusterId::Middle), r.at(ClusterId::Finisher));
  } else {
    for (auto c : kBattingClusters) r.clusters[static_cast<std::size_t>(c)].cluster = c;
  }
  const auto bowlers = d.bowling_candidates();
  r.clusters[static_cast<std::size_t>(ClusterId::Bowler)].cluster = ClusterId::Bowler;
  if (!bowlers.empty()) {
    const auto pf = compute_pool_features(d, Discipline::Bowling, bowlers, cfg.execution);
    r.clusters[static_cast<std::size_t>(ClusterId::Bowler)] = rank_from_features(pf, ClusterId::Bowler, cfg);
  }
  return r;
}

void write_ranking_csv(std::ostream& out, const Dataset& d, const ClusterRanking& ranking,
                       const std::map<PlayerId, PlayerLabels>& labels, bool header) {
  if (header) out << "cluster,rank,player_id,name,career_score,current_score,final_score,labels\n";
  const auto old_precision = out.precision(17);
  std::size_t rank = 0;
  for (const auto& e : ranking.entries) {
    std::string letters;
    if (ranking.cluster == ClusterId::Bowler) {
      letters = "B";
    } else if (auto it = labels.find(e.player); it != labels.end()) {
      letters = it->second.letters();
    }
    out << cluster_name(ranking.cluster) << ',' << ++rank << ',' << e.player << ',' << d.player(e.player).name << ','
        << e.career_score << ',' << e.current_score << ',' << e.final_rank_score << ',' << letters << '\n';
  }
  out.precision(old_precision);
}

}  // namespace iplrank
