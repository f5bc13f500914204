// Serial vs OpenMP scoring kernels on large synthetic pools.

#include <benchmark/benchmark.h>

#include <random>

#include "iplrank/kernels.hpp"
#include "iplrank/ranking.hpp"

using namespace iplrank;

namespace {

std::vector<BattingSeasonRecord> batting_records(std::size_t n) {
  std::mt19937_64 rng(42);
  std::vector<BattingSeasonRecord> out(n);
  for (auto& r : out) {
    r.innings = 1 + static_cast<std::int64_t>(rng() % 150);
    r.not_outs = static_cast<std::int64_t>(rng() % (r.innings + 1));
    r.balls_faced = 1 + static_cast<std::int64_t>(rng() % 3000);
    r.fours = static_cast<std::int64_t>(rng() % (r.balls_faced / 4 + 1));
    r.sixes = static_cast<std::int64_t>(rng() % (r.balls_faced / 8 + 1));
    r.runs = 4 * r.fours + 6 * r.sixes + static_cast<std::int64_t>(rng() % 1000);
    r.fifties = static_cast<std::int64_t>(rng() % (r.innings / 3 + 1));
  }
  return out;
}

template <kernels::Execution E>
void BM_BattingPipeline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto records = batting_records(n);
  const auto weights = default_profile(ClusterId::Opener).dense();
  const std::array<Feature, 4> cost_cols = {Feature::CostStrikeRate, Feature::CostAverage, Feature::CostRunWicket,
                                            Feature::CostHardHitting};
  std::vector<FeatureRow> rows(n);
  std::vector<double> scores(n), xfact(n, 0.5), final_scores(n);
  for (auto _ : state) {
    kernels::batting_rows(E, records, rows);
    kernels::normalize_columns(E, rows, cost_cols);
    kernels::weighted_scores(E, rows, weights, scores);
    kernels::final_scores(E, scores, scores, xfact, 40.0, final_scores);
    benchmark::DoNotOptimize(final_scores.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(BM_BattingPipeline<kernels::Execution::Serial>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_BattingPipeline<kernels::Execution::Parallel>)->RangeMultiplier(10)->Range(1000, 1000000);

BENCHMARK_MAIN();
