#include "pwim/session.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <set>
#include <filesystem>
#include <random>

#include "json_io.h"
#include "pwim/error.h"

namespace pwim {

using detail::json;

Session new_session(std::string session_id, std::string domain_id, std::shared_ptr<const Domain> domain) {
  Session s;
  s.session_id = std::move(session_id);
  s.domain_id = std::move(domain_id);
  s.db = make_database(domain->initial_facts);
  s.domain = std::move(domain);
  return s;
}

Database replay(const Domain& domain, std::span<const TranscriptEvent> events) {
  Database db = make_database(domain.initial_facts);
  std::int64_t step = 0;
  for (const auto& e : events) {
    auto action = resolve_action(domain, e.action_id);
    if (!action) throw Error(ErrorCode::kUnknownAction, "cannot replay " + e.action_id);
    db = apply_action(std::move(db), *domain.find_schema(action->schema_id), *action, domain.cast, step++).first;
  }
  return db;
}

std::string serialize_session(const Session& session) {
  json doc;
  doc["format"] = "pwim-session/1";
  doc["session_id"] = session.session_id;
  doc["domain_id"] = session.domain_id;
  doc["domain"] = json::parse(serialize_domain(*session.domain));
  doc["step"] = session.step;
  doc["facts"] = session.db.rendered();
  doc["transcript"] = json::array();
  for (const auto& e : session.transcript) doc["transcript"].push_back(detail::event_json(e));
  return doc.dump(2) + "\n";
}

Session parse_session(std::string_view bytes) {
  const auto corrupt = [](const std::string& why) { return Error(ErrorCode::kCorruptSave, why); };
  try {
    const json doc = json::parse(bytes);
    if (doc.at("format").get<std::string>() != "pwim-session/1") throw corrupt("unsupported format");

    Session s;
    s.session_id = doc.at("session_id").get<std::string>();
    s.domain_id = doc.at("domain_id").get<std::string>();
    s.domain = std::make_shared<const Domain>(load_domain(doc.at("domain").dump()));
    s.step = doc.at("step").get<std::int64_t>();

    std::set<Fact> facts;
    for (const auto& f : doc.at("facts")) facts.insert(parse_fact(f.get<std::string>()));
    if (!satisfies_exclusion(facts)) throw corrupt("facts violate exclusion");
    s.db = Database(std::move(facts));

    for (const auto& je : doc.at("transcript")) {
      TranscriptEvent e;
      e.step = je.at("step").get<std::int64_t>();
      e.action_id = je.at("action_id").get<std::string>();
      e.summary = je.at("summary").get<std::string>();
      if (je.contains("intent_text") && !je["intent_text"].is_null()) {
        e.intent_text = je["intent_text"].get<std::string>();
      }
      if (e.step != static_cast<std::int64_t>(s.transcript.size())) throw corrupt("transcript steps out of order");
      s.transcript.push_back(std::move(e));
    }
    if (s.step != static_cast<std::int64_t>(s.transcript.size())) throw corrupt("step does not match transcript");
    if (replay(*s.domain, s.transcript) != s.db) throw corrupt("facts do not match transcript replay");
    return s;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCorruptSave) throw;
    throw corrupt(std::string(e.code_name()) + ": " + e.detail());
  } catch (const json::exception& e) {
    throw corrupt(e.what());
  }
}

std::uint64_t state_hash(const Session& session) {
  std::string canon;
  for (const auto& f : session.db.rendered()) canon += f + "\n";
  canon += "--\n";
  for (const auto& e : session.transcript) canon += detail::event_json(e).dump() + "\n";
  canon += std::to_string(session.step);
  return fnv1a64(canon);
}

// DomainRegistry ------------------------------------------------------------

void DomainRegistry::add(std::string id, Domain domain) {
  domains_[std::move(id)] = std::make_shared<const Domain>(std::move(domain));
}

std::shared_ptr<const Domain> DomainRegistry::get(std::string_view id) const {
  auto it = domains_.find(id);
  if (it == domains_.end()) throw Error(ErrorCode::kUnknownDomain, "no domain '" + std::string(id) + "'");
  return it->second;
}

std::vector<std::string> DomainRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, d] : domains_) out.push_back(id);
  return out;
}

DomainRegistry DomainRegistry::load_directory(const std::string& dir, const LoadOptions& options) {
  constexpr std::string_view kSuffix = ".domain.json";
  DomainRegistry registry;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || !name.ends_with(kSuffix)) continue;
    registry.add(name.substr(0, name.size() - kSuffix.size()),
                 load_domain(read_file(entry.path().string()), options));
  }
  return registry;
}

// Ids -----------------------------------------------------------------------

IdGenerator random_ids() {
  auto rng = std::make_shared<std::mt19937_64>(std::random_device{}());
  auto mu = std::make_shared<std::mutex>();
  return [rng, mu] {
    std::lock_guard lock(*mu);
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>((*rng)()),
                  static_cast<unsigned long long>((*rng)()));
    return std::string(buf);
  };
}

IdGenerator sequential_ids(std::string prefix) {
  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  return [prefix = std::move(prefix), counter] { return prefix + std::to_string(++*counter); };
}

// PlayService ---------------------------------------------------------------

PlayService::PlayService(DomainRegistry domains, std::shared_ptr<EmbeddingProvider> provider,
                         RankingConfig config, IdGenerator ids)
    : domains_(std::move(domains)),
      backend_(std::move(provider)),
      intent_cache_(backend_),
      config_(config),
      ids_(std::move(ids)) {
  if (config_.k < 1) throw std::invalid_argument("ranking k must be >= 1");
}

std::shared_ptr<PlayService::Slot> PlayService::slot(std::string_view session_id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw Error(ErrorCode::kNoSession, "no session '" + std::string(session_id) + "'");
  return it->second;
}

std::string PlayService::register_slot(Session session) {
  auto s = std::make_shared<Slot>();
  std::unique_lock lock(sessions_mutex_);
  while (session.session_id.empty() || sessions_.count(session.session_id)) session.session_id = ids_();
  const std::string id = session.session_id;
  s->session = std::move(session);
  sessions_.emplace(id, std::move(s));
  return id;
}

SessionView PlayService::create_session(std::string_view domain_id) {
  auto domain = domains_.get(domain_id);
  const std::string id = register_slot(new_session("", std::string(domain_id), domain));
  return get_session(id);
}

Session PlayService::snapshot(std::string_view session_id) const {
  auto s = slot(session_id);
  std::shared_lock lock(s->mutex);
  return s->session;
}

SessionView PlayService::get_session(std::string_view session_id) const {
  const Session s = snapshot(session_id);
  SessionView view;
  view.session_id = s.session_id;
  view.step = s.step;
  view.actions = enumerate_actions(s.db, s.domain->schemas, s.domain->cast);
  view.facts = s.db.rendered();
  view.transcript = s.transcript;
  return view;
}

std::vector<GroundedAction> PlayService::available_actions(std::string_view session_id) const {
  const Session s = snapshot(session_id);
  return enumerate_actions(s.db, s.domain->schemas, s.domain->cast);
}

std::vector<EmbeddingVector> PlayService::summary_vectors(Slot& s, const std::vector<GroundedAction>& actions) {
  std::lock_guard lock(s.cache_mutex);
  std::vector<std::string> missing;
  for (const auto& a : actions) {
    if (!s.summary_embeddings.count(a.summary) &&
        std::find(missing.begin(), missing.end(), a.summary) == missing.end()) {
      missing.push_back(a.summary);
    }
  }
  if (!missing.empty()) {
    auto fresh = backend_->embed_batch(missing);
    for (std::size_t i = 0; i < missing.size(); ++i) s.summary_embeddings.emplace(missing[i], std::move(fresh[i]));
  }
  std::vector<EmbeddingVector> out;
  out.reserve(actions.size());
  for (const auto& a : actions) out.push_back(s.summary_embeddings.at(a.summary));
  return out;
}

IntentResult PlayService::submit_intent(std::string_view session_id, std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw Error(ErrorCode::kEmptyIntent, "intent text is empty");
  }
  auto s = slot(session_id);
  Session state;
  {
    std::shared_lock lock(s->mutex);
    state = s->session;
  }
  auto actions = enumerate_actions(state.db, state.domain->schemas, state.domain->cast);
  IntentResult result;
  result.step = state.step;
  if (actions.empty()) return result;

  const EmbeddingVector intent = intent_cache_.embed(std::string(text));
  auto vectors = summary_vectors(*s, actions);
  std::vector<CandidateAction> candidates;
  candidates.reserve(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) {
    candidates.push_back({std::move(actions[i]), std::move(vectors[i])});
  }
  result.ranked = rank_actions(intent, candidates, config_);
  return result;
}

ActResult PlayService::perform_action(std::string_view session_id, std::string_view action_id,
                                      std::optional<std::int64_t> expected_step,
                                      std::optional<std::string> intent_text) {
  auto s = slot(session_id);
  std::unique_lock lock(s->mutex);
  Session& session = s->session;
  const Domain& domain = *session.domain;

  if (expected_step && *expected_step != session.step) {
    throw Error(ErrorCode::kStaleAction, "offer was for step " + std::to_string(*expected_step) +
                                             ", session is at step " + std::to_string(session.step));
  }
  auto action = resolve_action(domain, action_id);
  if (!action) throw Error(ErrorCode::kUnknownAction, "no action '" + std::string(action_id) + "'");

  auto [db, event] = apply_action(session.db, *domain.find_schema(action->schema_id), *action, domain.cast,
                                  session.step);
  event.intent_text = std::move(intent_text);
  session.db = std::move(db);
  session.transcript.push_back(event);
  ++session.step;

  return {std::move(event), enumerate_actions(session.db, domain.schemas, domain.cast)};
}

std::string PlayService::save_session(std::string_view session_id) const {
  return serialize_session(snapshot(session_id));
}

std::string PlayService::load_session(std::string_view bytes) {
  return register_slot(parse_session(bytes));
}

std::uint64_t PlayService::state_hash(std::string_view session_id) const {
  return pwim::state_hash(snapshot(session_id));
}

}  // namespace pwim
