#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iplrank {

using PlayerId = std::string;

struct PlayerMeta {
  PlayerId id;
  std::string name;
  bool is_wicketkeeper = false;
  bool is_retired = false;

  bool operator==(const PlayerMeta&) const = default;
};

/// One season of batting counts. `season == 0` marks an aggregate.
struct BattingSeasonRecord {
  PlayerId player;
  int season = 0;
  std::int64_t innings = 0;
  std::int64_t not_outs = 0;
  std::int64_t runs = 0;
  std::int64_t balls_faced = 0;
  std::int64_t hundreds = 0;
  std::int64_t fifties = 0;
  std::int64_t fours = 0;
  std::int64_t sixes = 0;

  BattingSeasonRecord& operator+=(const BattingSeasonRecord& o);
  bool operator==(const BattingSeasonRecord&) const = default;
};

/// One season of bowling counts. `five_hauls` counts matches with five or more wickets.
struct BowlingSeasonRecord {
  PlayerId player;
  int season = 0;
  std::int64_t innings = 0;
  std::int64_t balls_bowled = 0;
  std::int64_t runs_conceded = 0;
  std::int64_t wickets = 0;
  std::int64_t four_hauls = 0;
  std::int64_t five_hauls = 0;

  BowlingSeasonRecord& operator+=(const BowlingSeasonRecord& o);
  bool operator==(const BowlingSeasonRecord&) const = default;
};

struct PlayerSeasons {
  BattingSeasonRecord batting;
  BowlingSeasonRecord bowling;
};

/// Raised for any schema or invariant violation while loading. The message
/// names the file, the 1-based data row and the violated rule.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a lookup names a player that is not in the dataset.
class UnknownPlayerError : public std::out_of_range {
 public:
  explicit UnknownPlayerError(const PlayerId& id) : std::out_of_range("unknown player: " + id) {}
};

/// Immutable, validated player-statistics dataset.
///
/// Absence of a (player, season) record means a zero record for that season.
/// Retired players are stored but never enter candidate pools.
class Dataset {
 public:
  Dataset() = default;

  /// Validates and indexes the given records. Throws DatasetError.
  /// When `total_league_innings` is not given it defaults to the largest
  /// career innings count of any player (batting or bowling), at least 1.
  Dataset(std::vector<PlayerMeta> players, std::vector<BattingSeasonRecord> batting,
          std::vector<BowlingSeasonRecord> bowling,
          std::optional<std::int64_t> total_league_innings = std::nullopt);

  const std::vector<PlayerMeta>& players() const { return players_; }
  const std::vector<BattingSeasonRecord>& batting() const { return batting_; }
  const std::vector<BowlingSeasonRecord>& bowling() const { return bowling_; }
  int current_season() const { return current_season_; }
  std::int64_t total_league_innings() const { return total_league_innings_; }

  bool contains(const PlayerId& id) const { return index_.count(id) != 0; }
  const PlayerMeta& player(const PlayerId& id) const;

  /// Field-wise sum over all seasons; season field is 0.
  PlayerSeasons career_aggregate(const PlayerId& id) const;
  /// The current-season records, or zero records when the player sat it out.
  PlayerSeasons current_season_record(const PlayerId& id) const;

  /// Non-retired players with at least one batting row, sorted by id.
  std::vector<PlayerId> batting_candidates() const;
  /// Non-retired players with at least one bowling row, sorted by id.
  std::vector<PlayerId> bowling_candidates() const;

  bool operator==(const Dataset& o) const;

 private:
  std::vector<PlayerMeta> players_;
  std::vector<BattingSeasonRecord> batting_;
  std::vector<BowlingSeasonRecord> bowling_;
  int current_season_ = 0;
  std::int64_t total_league_innings_ = 1;
  std::map<PlayerId, std::size_t> index_;
  std::map<PlayerId, std::vector<std::size_t>> batting_rows_;
  std::map<PlayerId, std::vector<std::size_t>> bowling_rows_;
};

/// Parses the three CSV streams (players, batting, bowling) into a Dataset.
Dataset load_dataset(std::istream& batting_csv, std::istream& bowling_csv, std::istream& players_csv,
                     std::optional<std::int64_t> total_league_innings = std::nullopt);

/// Loads `players.csv`, `batting.csv` and `bowling.csv` from a directory.
Dataset load_dataset_dir(const std::string& dir,
                         std::optional<std::int64_t> total_league_innings = std::nullopt);

void write_players_csv(const Dataset& d, std::ostream& out);
void write_batting_csv(const Dataset& d, std::ostream& out);
void write_bowling_csv(const Dataset& d, std::ostream& out);
void save_dataset_dir(const Dataset& d, const std::string& dir);

}  // namespace iplrank
