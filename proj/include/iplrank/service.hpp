#pragma once

#include <string>

#include "iplrank/auction.hpp"

namespace httplib {
class Server;
}

namespace iplrank {

/// Registers the HTTP endpoints on `server`:
///   POST /sessions                          {config, algorithm} -> {session_id, plan}
///   GET  /sessions/{id}/plan                -> {session_id, algorithm, unavailable, plan}
///   POST /sessions/{id}/unavailable         {player_id} -> {plan, substitution}
///   GET  /sessions/{id}/alternates?player=  -> {player_id, alternates}
///   POST /sessions/{id}/swap                {player_id, alternate_id} -> {plan, substitution}
///   POST /sessions/{id}/replan              -> {plan}
///   GET  /sessions/{id}/events              -> [event...]
///   GET  /sessions/{id}/snapshot            -> full session document
///   GET  /rankings?cluster=                 -> ranking table (format=csv for CSV)
///   GET  /players?query=                    -> matching players
///   GET  /health
void register_routes(httplib::Server& server, SessionStore& store);

/// Blocks serving on host:port. Throws std::runtime_error when the port cannot be bound.
void serve(SessionStore& store, const std::string& host, int port);

}  // namespace iplrank
