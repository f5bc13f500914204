#include "iplrank/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace iplrank::kernels {

namespace {

inline std::size_t col(Feature f) { return static_cast<std::size_t>(f); }

inline FeatureRow batting_row(const BattingSeasonRecord& r) {
  const auto f = batting_features(r);
  FeatureRow row{};
  row[col(Feature::CostStrikeRate)] = f.strike_rate;
  row[col(Feature::CostAverage)] = f.avg;
  row[col(Feature::HalfCenturiesPerInnings)] = f.hc_per_innings;
  row[col(Feature::CostRunWicket)] = f.run_wicket;
  row[col(Feature::CostHardHitting)] = f.hard_hitting;
  row[col(Feature::NotOutFraction)] = f.not_out_fraction;
  return row;
}

inline FeatureRow bowling_row(const BowlingSeasonRecord& r) {
  const auto f = bowling_features(r);
  FeatureRow row{};
  row[col(Feature::WicketPerBall)] = f.wicket_per_ball;
  row[col(Feature::Consistency)] = f.consistency;
  row[col(Feature::InvAverage)] = f.inv_average;
  row[col(Feature::InvEconomy)] = f.inv_economy;
  return row;
}

inline double dot(const FeatureRow& row, const FeatureRow& w) {
  double s = 0;
  for (std::size_t f = 0; f < kFeatureCount; ++f) s += w[f] * row[f];
  return s;
}

inline double final_score(double career, double current, double xfact, double mean) {
  if (mean == 0) return current;
  return career * xfact * (current / mean) + current;
}

}  // namespace

void batting_rows_serial(std::span<const BattingSeasonRecord> records, std::span<FeatureRow> out) {
  assert(records.size() == out.size());
  for (std::size_t i = 0; i < records.size(); ++i) out[i] = batting_row(records[i]);
}

void batting_rows_parallel(std::span<const BattingSeasonRecord> records, std::span<FeatureRow> out) {
  assert(records.size() == out.size());
  const auto n = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = batting_row(records[i]);
}

void bowling_rows_serial(std::span<const BowlingSeasonRecord> records, std::span<FeatureRow> out) {
  assert(records.size() == out.size());
  for (std::size_t i = 0; i < records.size(); ++i) out[i] = bowling_row(records[i]);
}

void bowling_rows_parallel(std::span<const BowlingSeasonRecord> records, std::span<FeatureRow> out) {
  assert(records.size() == out.size());
  const auto n = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = bowling_row(records[i]);
}

void normalize_columns_serial(std::span<FeatureRow> rows, std::span<const Feature> columns) {
  for (auto f : columns) {
    double top = 0;
    for (const auto& row : rows) top = std::max(top, row[col(f)]);
    for (auto& row : rows) row[col(f)] = top == 0 ? 0.0 : row[col(f)] / top;
  }
}

void normalize_columns_parallel(std::span<FeatureRow> rows, std::span<const Feature> columns) {
  const auto n = static_cast<std::int64_t>(rows.size());
  for (auto f : columns) {
    const auto c = col(f);
    double top = 0;
#pragma omp parallel for reduction(max : top) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) top = std::max(top, rows[i][c]);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) rows[i][c] = top == 0 ? 0.0 : rows[i][c] / top;
  }
}

void weighted_scores_serial(std::span<const FeatureRow> rows, const FeatureRow& weights, std::span<double> out) {
  assert(rows.size() == out.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = dot(rows[i], weights);
}

void weighted_scores_parallel(std::span<const FeatureRow> rows, const FeatureRow& weights, std::span<double> out) {
  assert(rows.size() == out.size());
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = dot(rows[i], weights);
}

void final_scores_serial(std::span<const double> career, std::span<const double> current,
                         std::span<const double> xfact, double mean_current, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = final_score(career[i], current[i], xfact[i], mean_current);
}

void final_scores_parallel(std::span<const double> career, std::span<const double> current,
                           std::span<const double> xfact, double mean_current, std::span<double> out) {
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = final_score(career[i], current[i], xfact[i], mean_current);
}

}  // namespace iplrank::kernels
