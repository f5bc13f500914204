#pragma once

// Data-parallel scoring kernels. Every kernel has a serial reference and an
// OpenMP variant; both write identical bits (per-element work only, and the
// column maximum is exact under any reduction order).

#include <span>

#include "iplrank/features.hpp"

namespace iplrank::kernels {

enum class Execution { Serial, Parallel };

/// Raw batting rows: cost slots hold the un-normalized feature value.
void batting_rows_serial(std::span<const BattingSeasonRecord> records, std::span<FeatureRow> out);
void batting_rows_parallel(std::span<const BattingSeasonRecord> records, std::span<FeatureRow> out);

void bowling_rows_serial(std::span<const BowlingSeasonRecord> records, std::span<FeatureRow> out);
void bowling_rows_parallel(std::span<const BowlingSeasonRecord> records, std::span<FeatureRow> out);

/// Divides each listed column by its maximum over `rows` (zero column stays zero).
void normalize_columns_serial(std::span<FeatureRow> rows, std::span<const Feature> columns);
void normalize_columns_parallel(std::span<FeatureRow> rows, std::span<const Feature> columns);

/// out[i] = sum_f weights[f] * rows[i][f]
void weighted_scores_serial(std::span<const FeatureRow> rows, const FeatureRow& weights, std::span<double> out);
void weighted_scores_parallel(std::span<const FeatureRow> rows, const FeatureRow& weights, std::span<double> out);

/// out[i] = career[i] * xfact[i] * (current[i] / mean_current) + current[i];
/// out[i] = current[i] when mean_current == 0.
void final_scores_serial(std::span<const double> career, std::span<const double> current,
                         std::span<const double> xfact, double mean_current, std::span<double> out);
void final_scores_parallel(std::span<const double> career, std::span<const double> current,
                           std::span<const double> xfact, double mean_current, std::span<double> out);

inline void batting_rows(Execution e, std::span<const BattingSeasonRecord> r, std::span<FeatureRow> out) {
  e == Execution::Parallel ? batting_rows_parallel(r, out) : batting_rows_serial(r, out);
}
inline void bowling_rows(Execution e, std::span<const BowlingSeasonRecord> r, std::span<FeatureRow> out) {
  e == Execution::Parallel ? bowling_rows_parallel(r, out) : bowling_rows_serial(r, out);
}
inline void normalize_columns(Execution e, std::span<FeatureRow> rows, std::span<const Feature> cols) {
  e == Execution::Parallel ? normalize_columns_parallel(rows, cols) : normalize_columns_serial(rows, cols);
}
inline void weighted_scores(Execution e, std::span<const FeatureRow> rows, const FeatureRow& w,
                            std::span<double> out) {
  e == Execution::Parallel ? weighted_scores_parallel(rows, w, out) : weighted_scores_serial(rows, w, out);
}
inline void final_scores(Execution e, std::span<const double> career, std::span<const double> current,
                         std::span<const double> xfact, double mean, std::span<double> out) {
  e == Execution::Parallel ? final_scores_parallel(career, current, xfact, mean, out)
                           : final_scores_serial(career, current, xfact, mean, out);
}

}  // namespace iplrank::kernels
