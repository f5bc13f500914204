// Command-line front end: ingest, rank, credits, select, alternate, serve.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "iplrank/auction.hpp"
#include "iplrank/service.hpp"

using namespace iplrank;

namespace {

struct Common {
  std::string data;
  std::string engine_config;
  std::int64_t league_innings = 0;

  Dataset load() const {
    if (data.empty()) throw std::invalid_argument("no data directory: pass --data or set IPLRANK_DATA");
    return load_dataset_dir(data, league_innings > 0 ? std::optional(league_innings) : std::nullopt);
  }

  Engine engine() const {
    EngineConfig cfg;
    if (!engine_config.empty()) cfg = engine_config_from_json(read_json_file(engine_config));
    return Engine(load(), cfg);
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--data", c.data, "Directory with players.csv, batting.csv, bowling.csv")->envname("IPLRANK_DATA");
  cmd->add_option("--engine-config", c.engine_config, "JSON with weight profiles, mean mode and credit groups");
  cmd->add_option("--league-innings", c.league_innings, "Total league innings (defaults to the largest career)");
}

TeamConfig team_config(const std::string& path) {
  return path.empty() ? TeamConfig{} : team_config_from_json(read_json_file(path));
}

Algorithm algorithm_or_throw(const std::string& name) {
  auto a = parse_algorithm(name);
  if (!a) throw std::invalid_argument("algorithm must be v1 or v2");
  return *a;
}

std::set<PlayerId> split_ids(const std::string& csv) {
  std::set<PlayerId> out;
  std::istringstream in(csv);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (!id.empty()) out.insert(id);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cricket player ranking, credit assignment and budgeted squad selection"};
  app.require_subcommand(1);

  Common common;
  std::string cluster_name_opt;
  std::string out_dir;
  std::string team_path;
  std::string algorithm_opt = "v1";
  std::string format = "csv";
  std::string player;
  std::string unavailable_opt;
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string sessions_dir;
  std::string serve_config;

  auto* ingest = app.add_subcommand("ingest", "Validate a dataset and print a summary");
  add_common(ingest, common);
  ingest->add_option("--out", out_dir, "Write the normalized dataset to this directory");

  auto* rank = app.add_subcommand("rank", "Print a cluster ranking as CSV");
  add_common(rank, common);
  rank->add_option("--cluster", cluster_name_opt, "opener|middle|finisher|bowler (default: all)");

  auto* credits = app.add_subcommand("credits", "Print credit points as CSV");
  add_common(credits, common);
  credits->add_option("--cluster", cluster_name_opt, "opener|middle|finisher|bowler (default: all)");

  auto* select = app.add_subcommand("select", "Select a squad and print the plan");
  add_common(select, common);
  select->add_option("--config", team_path, "Team config JSON (default: 15 players, value 135)");
  select->add_option("--algorithm", algorithm_opt, "v1 or v2")->check(CLI::IsMember({"v1", "v2"}));
  select->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  select->add_option("--unavailable", unavailable_opt, "Comma-separated ids already bought elsewhere");

  auto* alternate = app.add_subcommand("alternate", "List alternates for a planned player");
  add_common(alternate, common);
  alternate->add_option("--config", team_path, "Team config JSON");
  alternate->add_option("--algorithm", algorithm_opt, "v1 or v2")->check(CLI::IsMember({"v1", "v2"}));
  alternate->add_option("--player", player, "Planned player to replace")->required();
  alternate->add_option("--unavailable", unavailable_opt, "Comma-separated ids already bought elsewhere");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  add_common(serve_cmd, common);
  serve_cmd->add_option("--config", serve_config, "Service config JSON {data, port, host, sessions, engine_config}");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--port", port, "Port");
  serve_cmd->add_option("--sessions", sessions_dir, "Directory for session event logs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      const auto d = common.load();
      std::cout << "players: " << d.players().size() << "\n"
                << "batting rows: " << d.batting().size() << "\n"
                << "bowling rows: " << d.bowling().size() << "\n"
                << "current season: " << d.current_season() << "\n"
                << "league innings: " << d.total_league_innings() << "\n"
                << "batting candidates: " << d.batting_candidates().size() << "\n"
                << "bowling candidates: " << d.bowling_candidates().size() << "\n";
      if (!out_dir.empty()) save_dataset_dir(d, out_dir);
      return 0;
    }

    if (*rank || *credits) {
      const auto engine = common.engine();
      std::vector<ClusterId> clusters(kAllClusters.begin(), kAllClusters.end());
      if (!cluster_name_opt.empty()) {
        auto c = parse_cluster(cluster_name_opt);
        if (!c) throw std::invalid_argument("unknown cluster '" + cluster_name_opt + "'");
        clusters = {*c};
      }
      bool header = true;
      for (auto c : clusters) {
        if (*rank) write_ranking_csv(std::cout, engine.dataset(), engine.rankings().at(c), engine.rankings().labels, header);
        else write_credits_csv(std::cout, engine.credits().cluster(c), header);
        header = false;
      }
      return 0;
    }

    if (*select) {
      const auto engine = common.engine();
      const auto plan =
          select_team(algorithm_or_throw(algorithm_opt), engine.pools(), team_config(team_path), split_ids(unavailable_opt));
      auto name_of = [&](const PlayerId& p) { return engine.name_of(p); };
      if (format == "json") std::cout << to_json(plan, name_of).dump(2) << '\n';
      else write_plan_csv(std::cout, plan, name_of);
      return 0;
    }

    if (*alternate) {
      const auto engine = common.engine();
      const auto cfg = team_config(team_path);
      const auto algorithm = algorithm_or_throw(algorithm_opt);
      const auto unavailable = split_ids(unavailable_opt);
      const auto plan = select_team(algorithm, engine.pools(), cfg, unavailable);
      const auto list = recommend_alternates(plan, player, engine.pools(), cfg, unavailable, algorithm);
      std::cout << "rank,player_id,name,credit,primary\n";
      std::size_t i = 0;
      for (const auto& e : list) {
        std::cout << ++i << ',' << e.player << ',' << engine.name_of(e.player) << ',' << e.credit << ','
                  << cluster_name(e.primary) << '\n';
      }
      return 0;
    }

    if (*serve_cmd) {
      if (!serve_config.empty()) {
        const auto j = read_json_file(serve_config);
        if (common.data.empty()) common.data = j.value("data", std::string());
        if (common.engine_config.empty()) common.engine_config = j.value("engine_config", std::string());
        if (sessions_dir.empty()) sessions_dir = j.value("sessions", std::string());
        if (serve_cmd->count("--port") == 0) port = j.value("port", port);
        if (serve_cmd->count("--host") == 0) host = j.value("host", host);
      }
      const auto engine = common.engine();
      SessionStore store(engine, sessions_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(sessions_dir));
      std::cerr << "serving on " << host << ':' << port << '\n';
      serve(store, host, port);
      return 0;
    }
  } catch (const SelectionError& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
