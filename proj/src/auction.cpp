#include "iplrank/auction.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace iplrank {

std::string utc_timestamp() {
  using namespace std::chrono;
  const auto now = system_clock::now();
  const auto t = system_clock::to_time_t(now);
  const auto ms = duration_cast<milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%S") << '.' << std::setw(3) << std::setfill('0') << ms << 'Z';
  return out.str();
}

Json to_json(const AuctionEvent& e) {
  return {{"seq", e.seq}, {"ts", e.timestamp}, {"type", e.type}, {"payload", e.payload}};
}

AuctionEvent auction_event_from_json(const Json& j) {
  return {j.at("seq").get<std::uint64_t>(), j.at("ts").get<std::string>(), j.at("type").get<std::string>(),
          j.at("payload")};
}

Json to_json(const Substitution& s, const NameLookup& name_of) {
  Json j = {{"lost", s.lost},
            {"bucket", bucket_name(s.bucket)},
            {"position", s.position},
            {"old_credit", s.old_credit},
            {"replacement", s.replacement ? Json(*s.replacement) : Json(nullptr)},
            {"new_credit", s.new_credit},
            {"bucket_reselected", s.bucket_reselected}};
  if (!s.failure.empty()) j["failure"] = s.failure;
  if (name_of) {
    j["lost_name"] = name_of(s.lost);
    if (s.replacement) j["replacement_name"] = name_of(*s.replacement);
  }
  return j;
}

AuctionSession AuctionSession::create(const Engine& engine, SessionId id, const TeamConfig& cfg,
                                      Algorithm algorithm, const Clock& clock) {
  AuctionSession s;
  s.id_ = std::move(id);
  const auto event = s.next_event(
      "created", {{"config", to_json(cfg)}, {"algorithm", algorithm_name(algorithm)}}, clock);
  s.apply(engine, event);
  s.events_.push_back(event);
  return s;
}

AuctionSession AuctionSession::replay(const Engine& engine, SessionId id, const std::vector<AuctionEvent>& events) {
  if (events.empty() || events.front().type != "created") {
    throw std::invalid_argument("session log must start with a 'created' event");
  }
  AuctionSession s;
  s.id_ = std::move(id);
  for (const auto& e : events) {
    s.apply(engine, e);
    s.events_.push_back(e);
  }
  return s;
}

AuctionEvent AuctionSession::next_event(const std::string& type, Json payload, const Clock& clock) const {
  return {events_.size() + 1, clock ? clock() : std::string(), type, std::move(payload)};
}

std::optional<Substitution> AuctionSession::mark_unavailable(const Engine& engine, const PlayerId& p,
                                                             const Clock& clock) {
  if (!engine.dataset().contains(p)) throw UnknownPlayerError(p);
  if (unavailable_.count(p)) return std::nullopt;
  const auto event = next_event("unavailable", {{"player_id", p}}, clock);
  auto result = apply(engine, event);
  events_.push_back(event);
  return result;
}

Substitution AuctionSession::swap(const Engine& engine, const PlayerId& planned, const PlayerId& alternate,
                                  const Clock& clock) {
  const auto event = next_event("swap", {{"player_id", planned}, {"alternate_id", alternate}}, clock);
  auto result = apply(engine, event);
  events_.push_back(event);
  return *result;
}

void AuctionSession::replan(const Engine& engine, const Clock& clock) {
  const auto event = next_event("replan", Json::object(), clock);
  apply(engine, event);
  events_.push_back(event);
}

std::vector<PoolEntry> AuctionSession::alternates(const Engine& engine, const PlayerId& p) const {
  return recommend_alternates(plan_, p, engine.pools(), config_, unavailable_, algorithm_);
}

std::optional<Substitution> AuctionSession::apply(const Engine& engine, const AuctionEvent& e) {
  if (e.type == "created") {
    auto cfg = team_config_from_json(e.payload.at("config"));
    auto algorithm = parse_algorithm(e.payload.at("algorithm").get<std::string>());
    if (!algorithm) throw std::invalid_argument("unknown algorithm in session log");
    plan_ = select_team(*algorithm, engine.pools(), cfg);
    config_ = std::move(cfg);
    algorithm_ = *algorithm;
    return std::nullopt;
  }
  if (e.type == "unavailable") {
    const auto p = e.payload.at("player_id").get<PlayerId>();
    unavailable_.insert(p);
    if (auto* slot = plan_.find(p)) return repair_slot(engine, *slot);
    return std::nullopt;
  }
  if (e.type == "swap") {
    return apply_swap(engine, e.payload.at("player_id").get<PlayerId>(),
                      e.payload.at("alternate_id").get<PlayerId>());
  }
  if (e.type == "replan") {
    plan_ = select_team(algorithm_, engine.pools(), config_, unavailable_);
    return std::nullopt;
  }
  throw std::invalid_argument("unknown session event type '" + e.type + "'");
}

Substitution AuctionSession::repair_slot(const Engine& engine, Slot& slot) {
  Substitution sub;
  sub.lost = slot.player;
  sub.bucket = slot.bucket;
  sub.position = slot.position;
  sub.old_credit = slot.credit;

  auto& state = plan_.buckets[index_of(slot.bucket)];
  const Credit budget = slot.credit + state.remaining;
  const auto candidates = recommend_alternates(plan_, slot.player, engine.pools(), config_, unavailable_,
                                               algorithm_, std::numeric_limits<std::size_t>::max());
  for (const auto& c : candidates) {
    if (c.credit > budget) continue;
    slot.player = c.player;
    slot.credit = c.credit;
    slot.primary = c.primary;
    state.remaining = budget - c.credit;
    sub.replacement = c.player;
    sub.new_credit = c.credit;
    return sub;
  }

  // Nothing fits the freed budget: re-run the bucket around the other buckets' players.
  const Bucket bucket = slot.bucket;
  std::set<PlayerId> excluded = unavailable_;
  for (const auto& s : plan_.slots) {
    if (s.bucket != bucket && !s.vacant()) excluded.insert(s.player);
  }
  sub.bucket_reselected = true;
  try {
    const auto picks = greedy_fill_bucket(engine.pools()[index_of(bucket)], config_.size(bucket), state.cap,
                                          excluded, bucket == Bucket::Wicketkeeper ? keeper_rules(algorithm_, config_)
                                                                                   : SlotRules{});
    state.remaining = state.cap;
    state.failure.clear();
    for (auto& s : plan_.slots) {
      if (s.bucket != bucket) continue;
      const auto& pick = picks[s.position - 1];
      s.player = pick.player;
      s.credit = pick.credit;
      s.primary = pick.primary;
      state.remaining -= pick.credit;
    }
    const auto& refilled = *plan_.bucket_slots(bucket)[sub.position - 1];
    sub.replacement = refilled.player;
    sub.new_credit = refilled.credit;
  } catch (const SelectionError& err) {
    slot.player.clear();
    slot.credit = 0;
    state.remaining = budget;
    state.failure = err.what();
    sub.failure = err.what();
  }
  return sub;
}

Substitution AuctionSession::apply_swap(const Engine& engine, const PlayerId& planned, const PlayerId& alternate) {
  auto* slot = plan_.find(planned);
  if (!slot) throw std::invalid_argument("player " + planned + " is not in the plan");
  const auto options = recommend_alternates(plan_, planned, engine.pools(), config_, unavailable_, algorithm_,
                                            std::numeric_limits<std::size_t>::max());
  const PoolEntry* chosen = nullptr;
  for (const auto& o : options) {
    if (o.player == alternate) chosen = &o;
  }
  if (!chosen) throw std::invalid_argument(alternate + " is not an available alternate for " + planned);
  auto& state = plan_.buckets[index_of(slot->bucket)];
  const Credit budget = slot->credit + state.remaining;
  if (chosen->credit > budget) {
    std::ostringstream msg;
    msg << alternate << " costs " << chosen->credit << " but only " << budget << " is free in the bucket";
    throw std::invalid_argument(msg.str());
  }
  Substitution sub{planned, slot->bucket, slot->position, slot->credit, alternate, chosen->credit, false, {}};
  slot->player = chosen->player;
  slot->credit = chosen->credit;
  slot->primary = chosen->primary;
  state.remaining = budget - chosen->credit;
  return sub;
}

Json AuctionSession::snapshot(const Engine& engine) const {
  auto name_of = [&](const PlayerId& p) { return engine.name_of(p); };
  Json events = Json::array();
  for (const auto& e : events_) events.push_back(to_json(e));
  return {{"session_id", id_},
          {"algorithm", algorithm_name(algorithm_)},
          {"config", to_json(config_)},
          {"unavailable", unavailable_},
          {"plan", to_json(plan_, name_of)},
          {"events", events}};
}

SessionStore::SessionStore(const Engine& engine, std::optional<std::filesystem::path> dir, Clock clock)
    : engine_(engine), dir_(std::move(dir)), clock_(std::move(clock)) {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  std::vector<std::filesystem::path> logs;
  for (const auto& f : std::filesystem::directory_iterator(*dir_)) {
    if (f.path().extension() == ".jsonl") logs.push_back(f.path());
  }
  std::sort(logs.begin(), logs.end());
  for (const auto& path : logs) {
    std::ifstream in(path);
    std::vector<AuctionEvent> events;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) events.push_back(auction_event_from_json(Json::parse(line)));
    }
    const auto id = path.stem().string();
    sessions_.emplace(id, std::make_shared<Entry>(AuctionSession::replay(engine_, id, events)));
    if (id.size() > 1 && id[0] == 's') {
      try {
        next_id_ = std::max<std::uint64_t>(next_id_, std::stoull(id.substr(1)) + 1);
      } catch (const std::exception&) {
      }
    }
  }
}

SessionId SessionStore::create(const TeamConfig& cfg, Algorithm algorithm) {
  std::unique_lock lock(mutex_);
  const SessionId id = "s" + std::to_string(next_id_);
  auto entry = std::make_shared<Entry>(AuctionSession::create(engine_, id, cfg, algorithm, clock_));
  ++next_id_;
  persist(*entry, 0);
  sessions_.emplace(id, std::move(entry));
  return id;
}

std::vector<SessionId> SessionStore::ids() const {
  std::shared_lock lock(mutex_);
  std::vector<SessionId> out;
  for (const auto& [id, e] : sessions_) out.push_back(id);
  return out;
}

std::shared_ptr<SessionStore::Entry> SessionStore::lookup(const SessionId& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound(id);
  return it->second;
}

void SessionStore::persist(const Entry& entry, std::size_t from) const {
  if (!dir_) return;
  const auto& events = entry.session.events();
  if (from >= events.size()) return;
  try {
    std::ofstream out(*dir_ / (entry.session.id() + ".jsonl"), std::ios::app);
    for (std::size_t i = from; i < events.size(); ++i) out << to_json(events[i]).dump() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "failed to persist session " << entry.session.id() << ": " << e.what() << '\n';
  }
}

}  // namespace iplrank
