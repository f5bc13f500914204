#include "iplrank/stats_store.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace iplrank {

namespace {

constexpr const char* kPlayersHeader = "id,name,is_wicketkeeper,is_retired";
constexpr const char* kBattingHeader = "id,season,innings,not_outs,runs,balls,hundreds,fifties,fours,sixes";
constexpr const char* kBowlingHeader = "id,season,innings,balls,runs_conceded,wickets,four_hauls,five_hauls";

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

[[noreturn]] void fail(const std::string& file, std::size_t row, const std::string& rule) {
  std::ostringstream msg;
  msg << file << " row " << row << ": violates " << rule;
  throw DatasetError(msg.str());
}

// Reads a CSV stream, checks the exact header and hands every data row
// (1-based index, cells) to `on_row`.
template <typename F>
void read_csv(std::istream& in, const std::string& file, const std::string& header, F&& on_row) {
  std::string line;
  if (!std::getline(in, line)) {
    throw DatasetError(file + ": missing header, expected '" + header + "'");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (line != header) {
    throw DatasetError(file + ": header '" + line + "' does not match schema '" + header + "'");
  }
  const std::size_t columns = split_row(header).size();
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    auto cells = split_row(line);
    if (cells.size() != columns) {
      std::ostringstream rule;
      rule << "column count " << columns << " (got " << cells.size() << ")";
      fail(file, row, rule.str());
    }
    on_row(row, cells);
  }
}

std::int64_t parse_count(const std::string& cell, const std::string& file, std::size_t row,
                         const std::string& column) {
  std::int64_t v = 0;
  const auto* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc() || ptr != end || cell.empty()) {
    fail(file, row, column + " is an integer");
  }
  if (v < 0) fail(file, row, column + " ≥ 0");
  return v;
}

bool parse_bool(const std::string& cell, const std::string& file, std::size_t row,
                const std::string& column) {
  if (cell == "true") return true;
  if (cell == "false") return false;
  fail(file, row, column + " is true/false");
}

}  // namespace

BattingSeasonRecord& BattingSeasonRecord::operator+=(const BattingSeasonRecord& o) {
  innings += o.innings;
  not_outs += o.not_outs;
  runs += o.runs;
  balls_faced += o.balls_faced;
  hundreds += o.hundreds;
  fifties += o.fifties;
  fours += o.fours;
  sixes += o.sixes;
  return *this;
}

BowlingSeasonRecord& BowlingSeasonRecord::operator+=(const BowlingSeasonRecord& o) {
  innings += o.innings;
  balls_bowled += o.balls_bowled;
  runs_conceded += o.runs_conceded;
  wickets += o.wickets;
  four_hauls += o.four_hauls;
  five_hauls += o.five_hauls;
  return *this;
}

Dataset::Dataset(std::vector<PlayerMeta> players, std::vector<BattingSeasonRecord> batting,
                 std::vector<BowlingSeasonRecord> bowling, std::optional<std::int64_t> total_league_innings)
    : players_(std::move(players)), batting_(std::move(batting)), bowling_(std::move(bowling)) {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    const auto& p = players_[i];
    if (p.id.empty()) fail("players.csv", i + 1, "id non-empty");
    if (p.name.empty()) fail("players.csv", i + 1, "name non-empty");
    if (!index_.emplace(p.id, i).second) fail("players.csv", i + 1, "unique id");
  }

  std::set<std::pair<PlayerId, int>> seen;
  for (std::size_t i = 0; i < batting_.size(); ++i) {
    const auto& r = batting_[i];
    const std::size_t row = i + 1;
    if (!contains(r.player)) fail("batting.csv", row, "player exists in players.csv");
    if (r.innings < 0 || r.not_outs < 0 || r.runs < 0 || r.balls_faced < 0 || r.hundreds < 0 ||
        r.fifties < 0 || r.fours < 0 || r.sixes < 0) {
      fail("batting.csv", row, "counts ≥ 0");
    }
    if (r.not_outs > r.innings) fail("batting.csv", row, "not_outs ≤ innings");
    if (4 * r.fours + 6 * r.sixes > r.runs) fail("batting.csv", row, "fours·4 + sixes·6 ≤ runs");
    if (r.fours + r.sixes > r.balls_faced) fail("batting.csv", row, "fours + sixes ≤ balls");
    if (r.hundreds + r.fifties > r.innings) fail("batting.csv", row, "hundreds + fifties ≤ innings");
    if (!seen.emplace(r.player, r.season).second) fail("batting.csv", row, "unique (id, season)");
    batting_rows_[r.player].push_back(i);
  }

  seen.clear();
  for (std::size_t i = 0; i < bowling_.size(); ++i) {
    const auto& r = bowling_[i];
    const std::size_t row = i + 1;
    if (!contains(r.player)) fail("bowling.csv", row, "player exists in players.csv");
    if (r.innings < 0 || r.balls_bowled < 0 || r.runs_conceded < 0 || r.wickets < 0 || r.four_hauls < 0 ||
        r.five_hauls < 0) {
      fail("bowling.csv", row, "counts ≥ 0");
    }
    if (4 * r.four_hauls + 5 * r.five_hauls > r.wickets) {
      fail("bowling.csv", row, "4·four_hauls + 5·five_hauls ≤ wickets");
    }
    if (r.wickets > r.balls_bowled) fail("bowling.csv", row, "wickets ≤ balls");
    if (!seen.emplace(r.player, r.season).second) fail("bowling.csv", row, "unique (id, season)");
    bowling_rows_[r.player].push_back(i);
  }

  for (const auto& r : batting_) current_season_ = std::max(current_season_, r.season);
  for (const auto& r : bowling_) current_season_ = std::max(current_season_, r.season);

  std::int64_t max_career = 0;
  for (const auto& p : players_) {
    const auto c = career_aggregate(p.id);
    max_career = std::max({max_career, c.batting.innings, c.bowling.innings});
  }
  if (total_league_innings) {
    if (*total_league_innings <= 0 || *total_league_innings < max_career) {
      std::ostringstream msg;
      msg << "total_league_innings " << *total_league_innings
          << " must be positive and ≥ the largest career innings (" << max_career << ")";
      throw DatasetError(msg.str());
    }
    total_league_innings_ = *total_league_innings;
  } else {
    total_league_innings_ = std::max<std::int64_t>(1, max_career);
  }
}

const PlayerMeta& Dataset::player(const PlayerId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownPlayerError(id);
  return players_[it->second];
}

PlayerSeasons Dataset::career_aggregate(const PlayerId& id) const {
  if (!contains(id)) throw UnknownPlayerError(id);
  PlayerSeasons out;
  out.batting.player = id;
  out.bowling.player = id;
  if (auto it = batting_rows_.find(id); it != batting_rows_.end()) {
    for (auto i : it->second) out.batting += batting_[i];
  }
  if (auto it = bowling_rows_.find(id); it != bowling_rows_.end()) {
    for (auto i : it->second) out.bowling += bowling_[i];
  }
  return out;
}

PlayerSeasons Dataset::current_season_record(const PlayerId& id) const {
  if (!contains(id)) throw UnknownPlayerError(id);
  PlayerSeasons out;
  out.batting.player = id;
  out.bowling.player = id;
  out.batting.season = current_season_;
  out.bowling.season = current_season_;
  if (auto it = batting_rows_.find(id); it != batting_rows_.end()) {
    for (auto i : it->second) {
      if (batting_[i].season == current_season_) out.batting = batting_[i];
    }
  }
  if (auto it = bowling_rows_.find(id); it != bowling_rows_.end()) {
    for (auto i : it->second) {
      if (bowling_[i].season == current_season_) out.bowling = bowling_[i];
    }
  }
  return out;
}

std::vector<PlayerId> Dataset::batting_candidates() const {
  std::vector<PlayerId> out;
  for (const auto& [id, rows] : batting_rows_) {
    if (!player(id).is_retired) out.push_back(id);
  }
  return out;
}

std::vector<PlayerId> Dataset::bowling_candidates() const {
  std::vector<PlayerId> out;
  for (const auto& [id, rows] : bowling_rows_) {
    if (!player(id).is_retired) out.push_back(id);
  }
  return out;
}

bool Dataset::operator==(const Dataset& o) const {
  return players_ == o.players_ && batting_ == o.batting_ && bowling_ == o.bowling_ &&
         current_season_ == o.current_season_ && total_league_innings_ == o.total_league_innings_;
}

Dataset load_dataset(std::istream& batting_csv, std::istream& bowling_csv, std::istream& players_csv,
                     std::optional<std::int64_t> total_league_innings) {
  std::vector<PlayerMeta> players;
  read_csv(players_csv, "players.csv", kPlayersHeader, [&](std::size_t row, const auto& c) {
    players.push_back({c[0], c[1], parse_bool(c[2], "players.csv", row, "is_wicketkeeper"),
                       parse_bool(c[3], "players.csv", row, "is_retired")});
  });

  std::vector<BattingSeasonRecord> batting;
  read_csv(batting_csv, "batting.csv", kBattingHeader, [&](std::size_t row, const auto& c) {
    const std::string f = "batting.csv";
    BattingSeasonRecord r;
    r.player = c[0];
    r.season = static_cast<int>(parse_count(c[1], f, row, "season"));
    r.innings = parse_count(c[2], f, row, "innings");
    r.not_outs = parse_count(c[3], f, row, "not_outs");
    r.runs = parse_count(c[4], f, row, "runs");
    r.balls_faced = parse_count(c[5], f, row, "balls");
    r.hundreds = parse_count(c[6], f, row, "hundreds");
    r.fifties = parse_count(c[7], f, row, "fifties");
    r.fours = parse_count(c[8], f, row, "fours");
    r.sixes = parse_count(c[9], f, row, "sixes");
    batting.push_back(std::move(r));
  });

  std::vector<BowlingSeasonRecord> bowling;
  read_csv(bowling_csv, "bowling.csv", kBowlingHeader, [&](std::size_t row, const auto& c) {
    const std::string f = "bowling.csv";
    BowlingSeasonRecord r;
    r.player = c[0];
    r.season = static_cast<int>(parse_count(c[1], f, row, "season"));
    r.innings = parse_count(c[2], f, row, "innings");
    r.balls_bowled = parse_count(c[3], f, row, "balls");
    r.runs_conceded = parse_count(c[4], f, row, "runs_conceded");
    r.wickets = parse_count(c[5], f, row, "wickets");
    r.four_hauls = parse_count(c[6], f, row, "four_hauls");
    r.five_hauls = parse_count(c[7], f, row, "five_hauls");
    bowling.push_back(std::move(r));
  });

  return Dataset(std::move(players), std::move(batting), std::move(bowling), total_league_innings);
}

Dataset load_dataset_dir(const std::string& dir, std::optional<std::int64_t> total_league_innings) {
  namespace fs = std::filesystem;
  auto open = [&](const char* name) {
    std::ifstream in(fs::path(dir) / name);
    if (!in) throw DatasetError("cannot open " + (fs::path(dir) / name).string());
    return in;
  };
  auto batting = open("batting.csv");
  auto bowling = open("bowling.csv");
  auto players = open("players.csv");
  return load_dataset(batting, bowling, players, total_league_innings);
}

void write_players_csv(const Dataset& d, std::ostream& out) {
  out << kPlayersHeader << '\n';
  for (const auto& p : d.players()) {
    out << p.id << ',' << p.name << ',' << (p.is_wicketkeeper ? "true" : "false") << ','
        << (p.is_retired ? "true" : "false") << '\n';
  }
}

void write_batting_csv(const Dataset& d, std::ostream& out) {
  out << kBattingHeader << '\n';
  for (const auto& r : d.batting()) {
    out << r.player << ',' << r.season << ',' << r.innings << ',' << r.not_outs << ',' << r.runs << ','
        << r.balls_faced << ',' << r.hundreds << ',' << r.fifties << ',' << r.fours << ',' << r.sixes << '\n';
  }
}

void write_bowling_csv(const Dataset& d, std::ostream& out) {
  out << kBowlingHeader << '\n';
  for (const auto& r : d.bowling()) {
    out << r.player << ',' << r.season << ',' << r.innings << ',' << r.balls_bowled << ',' << r.runs_conceded
        << ',' << r.wickets << ',' << r.four_hauls << ',' << r.five_hauls << '\n';
  }
}

void save_dataset_dir(const Dataset& d, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream players(fs::path(dir) / "players.csv");
  write_players_csv(d, players);
  std::ofstream batting(fs::path(dir) / "batting.csv");
  write_batting_csv(d, batting);
  std::ofstream bowling(fs::path(dir) / "bowling.csv");
  write_bowling_csv(d, bowling);
}

}  // namespace iplrank
