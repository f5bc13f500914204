#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iplrank/stats_store.hpp"

namespace iplrank {

struct BattingFeatures {
  double avg = 0;
  double strike_rate = 0;
  double run_wicket = 0;    // non-boundary runs per non-boundary ball
  double hard_hitting = 0;  // boundary runs per ball
  double hc_per_innings = 0;
  double not_out_fraction = 0;
};

struct BowlingFeatures {
  double wicket_per_ball = 0;
  double inv_average = 0;
  double inv_economy = 0;
  double consistency = 0;
};

struct Experience {
  double xfact = 0;
  double cost_xfact = 0;
};

enum class Discipline { Batting, Bowling };

/// Scoring inputs addressable by a weight profile. Batting entries carry the
/// cost-normalized value where one exists; bowling entries are raw.
enum class Feature : std::size_t {
  CostStrikeRate,
  CostAverage,
  HalfCenturiesPerInnings,
  CostRunWicket,
  CostHardHitting,
  NotOutFraction,
  WicketPerBall,
  Consistency,
  InvAverage,
  InvEconomy,
};
inline constexpr std::size_t kFeatureCount = 10;

using FeatureRow = std::array<double, kFeatureCount>;

std::string_view feature_name(Feature f);
std::optional<Feature> parse_feature(std::string_view name);
Discipline feature_discipline(Feature f);

BattingFeatures batting_features(const BattingSeasonRecord& r);
BowlingFeatures bowling_features(const BowlingSeasonRecord& r);

/// f(i) / max_j f(j); all zeros when the maximum is zero. Throws
/// std::invalid_argument on empty input or negative values.
std::map<PlayerId, double> cost_normalize(const std::map<PlayerId, double>& values);

/// Experience factor of `p` relative to `pool`, using career innings of the
/// given discipline over the dataset's league innings count.
Experience experience(const Dataset& d, const PlayerId& p, const std::vector<PlayerId>& pool,
                      Discipline discipline = Discipline::Batting);

/// cost_xfact for every pool member, in pool order.
std::vector<double> cost_xfacts(const Dataset& d, const std::vector<PlayerId>& pool, Discipline discipline);

}  // namespace iplrank
