#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "iplrank/json_io.hpp"

namespace iplrank {

using SessionId = std::string;
using Clock = std::function<std::string()>;

/// ISO-8601 UTC wall-clock time with millisecond precision.
std::string utc_timestamp();

struct AuctionEvent {
  std::uint64_t seq = 0;
  std::string timestamp;
  std::string type;  // created | unavailable | swap | replan
  Json payload;
};

Json to_json(const AuctionEvent& e);
AuctionEvent auction_event_from_json(const Json& j);

/// Outcome of repairing a plan slot after its player became unavailable or
/// was swapped out.
struct Substitution {
  PlayerId lost;
  Bucket bucket = Bucket::Opener;
  std::size_t position = 0;
  Credit old_credit = 0;
  std::optional<PlayerId> replacement;
  Credit new_credit = 0;
  bool bucket_reselected = false;  // no alternate fit, the bucket was refilled
  std::string failure;             // bucket could not be refilled
};

Json to_json(const Substitution& s, const NameLookup& name_of = {});

class SessionNotFound : public std::out_of_range {
 public:
  explicit SessionNotFound(const SessionId& id) : std::out_of_range("unknown session: " + id) {}
};

/// A live auction: the current plan plus the set of players other franchises
/// have bought. Every mutation is an event; replaying the log from the
/// creation event reproduces the plan exactly.
class AuctionSession {
 public:
  /// Throws SelectionError when the config is infeasible.
  static AuctionSession create(const Engine& engine, SessionId id, const TeamConfig& cfg, Algorithm algorithm,
                               const Clock& clock = utc_timestamp);

  /// Rebuilds a session from its log. The first event must be `created`.
  static AuctionSession replay(const Engine& engine, SessionId id, const std::vector<AuctionEvent>& events);

  /// Marks a player bought elsewhere. A planned player's slot is refilled with
  /// the first affordable alternate, or the bucket is re-run when none fits.
  /// Returns nullopt (and logs nothing) when the player was already unavailable.
  std::optional<Substitution> mark_unavailable(const Engine& engine, const PlayerId& p,
                                               const Clock& clock = utc_timestamp);

  /// Replaces a planned player with a specific alternate from the same bucket.
  Substitution swap(const Engine& engine, const PlayerId& planned, const PlayerId& alternate,
                    const Clock& clock = utc_timestamp);

  /// Full re-selection over all still-available players.
  void replan(const Engine& engine, const Clock& clock = utc_timestamp);

  std::vector<PoolEntry> alternates(const Engine& engine, const PlayerId& p) const;

  const SessionId& id() const { return id_; }
  const TeamConfig& config() const { return config_; }
  Algorithm algorithm() const { return algorithm_; }
  const std::set<PlayerId>& unavailable() const { return unavailable_; }
  const TeamPlan& plan() const { return plan_; }
  const std::vector<AuctionEvent>& events() const { return events_; }

  Json snapshot(const Engine& engine) const;

 private:
  AuctionSession() = default;

  // Applies an event to the state. Either succeeds fully or throws leaving
  // the state untouched.
  std::optional<Substitution> apply(const Engine& engine, const AuctionEvent& e);
  Substitution repair_slot(const Engine& engine, Slot& slot);
  Substitution apply_swap(const Engine& engine, const PlayerId& planned, const PlayerId& alternate);
  AuctionEvent next_event(const std::string& type, Json payload, const Clock& clock) const;

  SessionId id_;
  TeamConfig config_;
  Algorithm algorithm_ = Algorithm::V1;
  std::set<PlayerId> unavailable_;
  TeamPlan plan_;
  std::vector<AuctionEvent> events_;
};

/// Thread-safe collection of sessions. Mutations of one session are
/// serialized by a per-session mutex; distinct sessions proceed in parallel.
/// With a directory, each session's log is appended to `<dir>/<id>.jsonl` and
/// existing logs are replayed on construction.
class SessionStore {
 public:
  explicit SessionStore(const Engine& engine, std::optional<std::filesystem::path> dir = std::nullopt,
                        Clock clock = utc_timestamp);

  /// Returns the created session's id.
  SessionId create(const TeamConfig& cfg, Algorithm algorithm);

  /// Runs `f` with exclusive access to the session; persists any events it appended.
  template <typename F>
  auto with_session(const SessionId& id, F&& f) {
    auto entry = lookup(id);
    std::lock_guard lock(entry->mutex);
    const auto before = entry->session.events().size();
    struct Persist {
      SessionStore* store;
      Entry* entry;
      std::size_t before;
      ~Persist() { store->persist(*entry, before); }
    } persist{this, entry.get(), before};
    return f(entry->session);
  }

  std::vector<SessionId> ids() const;
  const Engine& engine() const { return engine_; }
  const Clock& clock() const { return clock_; }

 private:
  struct Entry {
    explicit Entry(AuctionSession s) : session(std::move(s)) {}
    std::mutex mutex;
    AuctionSession session;
  };

  std::shared_ptr<Entry> lookup(const SessionId& id) const;
  void persist(const Entry& entry, std::size_t from) const;

  const Engine& engine_;
  std::optional<std::filesystem::path> dir_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
  std::map<SessionId, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
};

}  // namespace iplrank
