#include "iplrank/service.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "httplib.h"

namespace iplrank {

namespace {

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& message, Json extra = Json::object()) {
  extra["error"] = message;
  reply(res, status, extra);
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON body: ") + e.what());
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Maps exceptions onto status codes so every handler reports failures the same way.
template <typename F>
auto guarded(F&& handler) {
  return [handler = std::forward<F>(handler)](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const SessionNotFound& e) {
      reply_error(res, 404, e.what());
    } catch (const UnknownPlayerError& e) {
      reply_error(res, 404, e.what());
    } catch (const SelectionError& e) {
      Json extra = {{"kind", error_kind_name(e.kind())}};
      if (e.bucket()) extra["bucket"] = bucket_name(*e.bucket());
      reply_error(res, 422, e.what(), extra);
    } catch (const std::invalid_argument& e) {
      reply_error(res, 400, e.what());
    } catch (const std::exception& e) {
      reply_error(res, 500, e.what());
    }
  };
}

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store) {
  const Engine& engine = store.engine();
  const NameLookup name_of = [&engine](const PlayerId& p) { return engine.name_of(p); };

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/health", [](const httplib::Request&, httplib::Response& res) { reply(res, 200, {{"status", "ok"}}); });

  server.Post("/sessions", guarded([&store, name_of](const httplib::Request& req, httplib::Response& res) {
                const auto body = parse_body(req);
                const auto cfg = team_config_from_json(body.contains("config") ? body.at("config") : body);
                const auto algorithm = parse_algorithm(body.value("algorithm", std::string("v1")));
                if (!algorithm) throw std::invalid_argument("algorithm must be 'v1' or 'v2'");
                const auto id = store.create(cfg, *algorithm);
                const auto plan = store.with_session(id, [](AuctionSession& s) { return s.plan(); });
                reply(res, 201, {{"session_id", id}, {"plan", to_json(plan, name_of)}});
              }));

  server.Get(R"(/sessions/([^/]+)/plan)", guarded([&store, name_of](const httplib::Request& req, httplib::Response& res) {
               const SessionId id = req.matches[1];
               reply(res, 200, store.with_session(id, [&](AuctionSession& s) {
                 return Json{{"session_id", s.id()},
                             {"algorithm", algorithm_name(s.algorithm())},
                             {"config", to_json(s.config())},
                             {"unavailable", s.unavailable()},
                             {"plan", to_json(s.plan(), name_of)}};
               }));
             }));

  server.Post(R"(/sessions/([^/]+)/unavailable)",
              guarded([&store, &engine, name_of](const httplib::Request& req, httplib::Response& res) {
                const SessionId id = req.matches[1];
                const auto body = parse_body(req);
                if (!body.contains("player_id")) throw std::invalid_argument("player_id is required");
                const auto player = body.at("player_id").get<std::string>();
                reply(res, 200, store.with_session(id, [&](AuctionSession& s) {
                  const bool already = s.unavailable().count(player) != 0;
                  const auto sub = s.mark_unavailable(engine, player, store.clock());
                  return Json{{"plan", to_json(s.plan(), name_of)},
                              {"changed", !already},
                              {"substitution", sub ? to_json(*sub, name_of) : Json(nullptr)}};
                }));
              }));

  server.Get(R"(/sessions/([^/]+)/alternates)",
             guarded([&store, &engine, name_of](const httplib::Request& req, httplib::Response& res) {
               const SessionId id = req.matches[1];
               if (!req.has_param("player")) throw std::invalid_argument("query parameter 'player' is required");
               const auto player = req.get_param_value("player");
               reply(res, 200, store.with_session(id, [&](AuctionSession& s) {
                 Json list = Json::array();
                 for (const auto& e : s.alternates(engine, player)) list.push_back(to_json(e, name_of));
                 return Json{{"player_id", player}, {"alternates", list}};
               }));
             }));

  server.Post(R"(/sessions/([^/]+)/swap)",
              guarded([&store, &engine, name_of](const httplib::Request& req, httplib::Response& res) {
                const SessionId id = req.matches[1];
                const auto body = parse_body(req);
                if (!body.contains("player_id") || !body.contains("alternate_id")) {
                  throw std::invalid_argument("player_id and alternate_id are required");
                }
                reply(res, 200, store.with_session(id, [&](AuctionSession& s) {
                  const auto sub = s.swap(engine, body.at("player_id").get<std::string>(),
                                          body.at("alternate_id").get<std::string>(), store.clock());
                  return Json{{"plan", to_json(s.plan(), name_of)}, {"substitution", to_json(sub, name_of)}};
                }));
              }));

  server.Post(R"(/sessions/([^/]+)/replan)",
              guarded([&store, &engine, name_of](const httplib::Request& req, httplib::Response& res) {
                const SessionId id = req.matches[1];
                reply(res, 200, store.with_session(id, [&](AuctionSession& s) {
                  s.replan(engine, store.clock());
                  return Json{{"plan", to_json(s.plan(), name_of)}};
                }));
              }));

  server.Get(R"(/sessions/([^/]+)/events)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const SessionId id = req.matches[1];
               reply(res, 200, store.with_session(id, [](AuctionSession& s) {
                 Json list = Json::array();
                 for (const auto& e : s.events()) list.push_back(to_json(e));
                 return list;
               }));
             }));

  server.Get(R"(/sessions/([^/]+)/snapshot)",
             guarded([&store, &engine](const httplib::Request& req, httplib::Response& res) {
               const SessionId id = req.matches[1];
               reply(res, 200, store.with_session(id, [&](AuctionSession& s) { return s.snapshot(engine); }));
             }));

  server.Get("/rankings", guarded([&engine, name_of](const httplib::Request& req, httplib::Response& res) {
               const auto name = req.has_param("cluster") ? req.get_param_value("cluster") : std::string();
               const auto cluster = parse_cluster(lower(name));
               if (!cluster) throw std::invalid_argument("cluster must be one of opener|middle|finisher|bowler");
               const auto& ranking = engine.rankings().at(*cluster);
               if (req.has_param("format") && req.get_param_value("format") == "csv") {
                 std::ostringstream csv;
                 write_ranking_csv(csv, engine.dataset(), ranking, engine.rankings().labels);
                 res.set_content(csv.str(), "text/csv");
                 return;
               }
               auto body = to_json(ranking, engine.rankings(), name_of);
               for (auto& row : body["entries"]) {
                 row["credit"] = engine.credits().credit(*cluster, row["player_id"].get<std::string>()).value_or(0);
               }
               reply(res, 200, body);
             }));

  server.Get("/players", guarded([&engine](const httplib::Request& req, httplib::Response& res) {
               const auto query = lower(req.has_param("query") ? req.get_param_value("query") : std::string());
               Json list = Json::array();
               for (const auto& p : engine.dataset().players()) {
                 if (lower(p.id).find(query) == std::string::npos && lower(p.name).find(query) == std::string::npos) {
                   continue;
                 }
                 Json row = {{"player_id", p.id},
                             {"name", p.name},
                             {"is_wicketkeeper", p.is_wicketkeeper},
                             {"is_retired", p.is_retired}};
                 if (auto it = engine.rankings().labels.find(p.id); it != engine.rankings().labels.end()) {
                   row["primary"] = cluster_name(it->second.primary);
                   row["labels"] = it->second.letters();
                 }
                 Json credits = Json::object();
                 for (auto c : kAllClusters) {
                   if (auto cr = engine.credits().credit(c, p.id)) credits[std::string(cluster_name(c))] = *cr;
                 }
                 row["credits"] = credits;
                 list.push_back(std::move(row));
               }
               reply(res, 200, list);
             }));
}

void serve(SessionStore& store, const std::string& host, int port) {
  httplib::Server server;
  register_routes(server, store);
  if (!server.bind_to_port(host, port)) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  server.listen_after_bind();
}

}  // namespace iplrank
