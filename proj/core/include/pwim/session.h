#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pwim/actions.h"
#include "pwim/database.h"
#include "pwim/domain.h"
#include "pwim/embedding.h"
#include "pwim/rank.h"

namespace pwim {

/// One live playthrough. `step` always equals `transcript.size()`.
struct Session {
  std::string session_id;
  std::string domain_id;
  std::shared_ptr<const Domain> domain;
  Database db;
  std::vector<TranscriptEvent> transcript;
  std::int64_t step = 0;
};

Session new_session(std::string session_id, std::string domain_id, std::shared_ptr<const Domain> domain);

/// Re-applies `events` from the domain's initial state. Throws
/// Error(kUnknownAction) / Error(kStaleAction) if an event cannot be replayed.
Database replay(const Domain& domain, std::span<const TranscriptEvent> events);

/// Self-contained save document (the domain is embedded).
std::string serialize_session(const Session& session);
/// Throws Error(kCorruptSave) for anything that is not a consistent save.
Session parse_session(std::string_view bytes);

/// Stable 64-bit digest of (facts, transcript, step).
std::uint64_t state_hash(const Session& session);

class DomainRegistry {
 public:
  void add(std::string id, Domain domain);
  /// Throws Error(kUnknownDomain).
  std::shared_ptr<const Domain> get(std::string_view id) const;
  std::vector<std::string> ids() const;

  /// Registers every "<id>.domain.json" in `dir`.
  static DomainRegistry load_directory(const std::string& dir, const LoadOptions& options = {});

 private:
  std::map<std::string, std::shared_ptr<const Domain>, std::less<>> domains_;
};

struct SessionView {
  std::string session_id;
  std::int64_t step = 0;
  std::vector<GroundedAction> actions;
  std::vector<std::string> facts;
  std::vector<TranscriptEvent> transcript;
};

struct IntentResult {
  std::int64_t step = 0;
  std::vector<RankedAction> ranked;
};

struct ActResult {
  TranscriptEvent event;
  std::vector<GroundedAction> actions;
};

using IdGenerator = std::function<std::string()>;

/// Random 128-bit hex ids.
IdGenerator random_ids();
/// "<prefix>1", "<prefix>2", ... for reproducible fixtures.
IdGenerator sequential_ids(std::string prefix);

/// The play loop over many concurrent sessions. Ranking never mutates a
/// session; only perform_action does, serialized per session.
class PlayService {
 public:
  PlayService(DomainRegistry domains, std::shared_ptr<EmbeddingProvider> provider,
              RankingConfig config = {}, IdGenerator ids = random_ids());

  SessionView create_session(std::string_view domain_id);
  SessionView get_session(std::string_view session_id) const;
  std::vector<GroundedAction> available_actions(std::string_view session_id) const;

  /// Ranks the currently available actions against `text`. Pure with respect
  /// to game state.
  IntentResult submit_intent(std::string_view session_id, std::string_view text);

  /// Performs an offered action. `expected_step`, when given, must equal the
  /// session's current step (step-tagged offers).
  ActResult perform_action(std::string_view session_id, std::string_view action_id,
                           std::optional<std::int64_t> expected_step = std::nullopt,
                           std::optional<std::string> intent_text = std::nullopt);

  std::string save_session(std::string_view session_id) const;
  /// Adopts a saved session; returns its id (a fresh one if the saved id is
  /// already live).
  std::string load_session(std::string_view bytes);

  /// Copy of the session state, consistent at one step.
  Session snapshot(std::string_view session_id) const;
  std::uint64_t state_hash(std::string_view session_id) const;

  const DomainRegistry& domains() const { return domains_; }
  const RankingConfig& config() const { return config_; }

 private:
  struct Slot {
    mutable std::shared_mutex mutex;
    Session session;
    std::mutex cache_mutex;
    std::unordered_map<std::string, EmbeddingVector> summary_embeddings;
  };

  std::shared_ptr<Slot> slot(std::string_view session_id) const;
  std::string register_slot(Session session);
  std::vector<EmbeddingVector> summary_vectors(Slot& slot, const std::vector<GroundedAction>& actions);

  DomainRegistry domains_;
  std::shared_ptr<EmbeddingProvider> backend_;
  CachingProvider intent_cache_;
  RankingConfig config_;
  IdGenerator ids_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Slot>, std::less<>> sessions_;
};

}  // namespace pwim
