#include "iplrank/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace iplrank {

namespace {

double ratio(double num, double den) { return den == 0 ? 0.0 : num / den; }

constexpr std::array<std::string_view, kFeatureCount> kNames = {
    "cost_strike_rate", "cost_average",  "hc_per_innings", "cost_run_wicket", "cost_hard_hitting",
    "not_out_fraction", "wicket_per_ball", "consistency",  "inv_average",     "inv_economy",
};

}  // namespace

std::string_view feature_name(Feature f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Feature> parse_feature(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Feature>(i);
  }
  return std::nullopt;
}

Discipline feature_discipline(Feature f) {
  return static_cast<std::size_t>(f) < static_cast<std::size_t>(Feature::WicketPerBall) ? Discipline::Batting
                                                                                         : Discipline::Bowling;
}

BattingFeatures batting_features(const BattingSeasonRecord& r) {
  const auto boundary_runs = static_cast<double>(4 * r.fours + 6 * r.sixes);
  const auto dismissals = std::max<std::int64_t>(1, r.innings - r.not_outs);
  BattingFeatures f;
  f.avg = static_cast<double>(r.runs) / static_cast<double>(dismissals);
  f.strike_rate = ratio(100.0 * static_cast<double>(r.runs), static_cast<double>(r.balls_faced));
  f.hard_hitting = ratio(boundary_runs, static_cast<double>(r.balls_faced));
  f.run_wicket = ratio(static_cast<double>(r.runs) - boundary_runs,
                       static_cast<double>(r.balls_faced - r.fours - r.sixes));
  f.hc_per_innings = ratio(static_cast<double>(r.fifties + r.hundreds), static_cast<double>(r.innings));
  f.not_out_fraction = ratio(static_cast<double>(r.not_outs), static_cast<double>(r.innings));
  return f;
}

BowlingFeatures bowling_features(const BowlingSeasonRecord& r) {
  const auto conceded = static_cast<double>(r.runs_conceded == 0 ? 1 : r.runs_conceded);
  const auto balls = static_cast<double>(r.balls_bowled);
  const auto residual = r.wickets - 4 * r.four_hauls - 5 * r.five_hauls;
  BowlingFeatures f;
  f.wicket_per_ball = ratio(static_cast<double>(r.wickets), balls);
  f.inv_average = static_cast<double>(r.wickets) / conceded;
  f.inv_economy = balls / (6.0 * conceded);
  f.consistency = ratio(static_cast<double>(4 * r.four_hauls + 5 * r.five_hauls + residual) * 6.0, balls);
  return f;
}

std::map<PlayerId, double> cost_normalize(const std::map<PlayerId, double>& values) {
  if (values.empty()) throw std::invalid_argument("cost_normalize: empty input");
  double top = 0;
  for (const auto& [id, v] : values) {
    if (v < 0) throw std::invalid_argument("cost_normalize: negative value for " + id);
    top = std::max(top, v);
  }
  std::map<PlayerId, double> out;
  for (const auto& [id, v] : values) out.emplace(id, top == 0 ? 0.0 : v / top);
  return out;
}

std::vector<double> cost_xfacts(const Dataset& d, const std::vector<PlayerId>& pool, Discipline discipline) {
  std::vector<double> x;
  x.reserve(pool.size());
  const auto league = static_cast<double>(d.total_league_innings());
  for (const auto& id : pool) {
    const auto c = d.career_aggregate(id);
    const auto innings = discipline == Discipline::Batting ? c.batting.innings : c.bowling.innings;
    x.push_back(static_cast<double>(innings) / league);
  }
  if (x.empty()) return x;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double range = *hi - *lo;
  for (auto& v : x) v = range == 0 ? 1.0 : v / range;
  return x;
}

Experience experience(const Dataset& d, const PlayerId& p, const std::vector<PlayerId>& pool,
                      Discipline discipline) {
  auto it = std::find(pool.begin(), pool.end(), p);
  if (it == pool.end()) throw std::invalid_argument("experience: " + p + " is not in the pool");
  const auto c = d.career_aggregate(p);
  const auto innings = discipline == Discipline::Batting ? c.batting.innings : c.bowling.innings;
  Experience e;
  e.xfact = static_cast<double>(innings) / static_cast<double>(d.total_league_innings());
  e.cost_xfact = cost_xfacts(d, pool, discipline)[static_cast<std::size_t>(it - pool.begin())];
  return e;
}

}  // namespace iplrank
