#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pwim/database.h"
#include "pwim/schema.h"

namespace pwim {

struct TranscriptEvent {
  std::int64_t step = 0;
  std::string action_id;
  std::string summary;
  std::optional<std::string> intent_text;

  bool operator==(const TranscriptEvent&) const = default;
};

/// Variables a binding for `schema` must cover: roles plus every variable of
/// the positive preconditions, sorted.
std::vector<std::string> schema_variables(const ActionSchema& schema);

/// Every binding under which the schema's preconditions hold and each role is
/// bound to a cast member, in binding order.
std::vector<Binding> ground_schema(const Database& db, const ActionSchema& schema,
                                   std::span<const EntityId> cast);

/// All available actions: schema order, then binding order.
std::vector<GroundedAction> enumerate_actions(const Database& db, std::span<const ActionSchema> schemas,
                                              std::span<const EntityId> cast);

/// Re-checks preconditions for one binding (roles in cast included).
bool preconditions_hold(const Database& db, const ActionSchema& schema, const Binding& binding,
                        std::span<const EntityId> cast);

/// Resolves an action id against a domain. Returns nullopt when the schema
/// does not exist or the binding does not cover exactly the schema variables.
/// Does not check preconditions.
std::optional<GroundedAction> resolve_action(const Domain& domain, std::string_view action_id);

/// Applies effects in order after re-checking preconditions.
/// Throws Error(kStaleAction) if they no longer hold.
std::pair<Database, TranscriptEvent> apply_action(Database db, const ActionSchema& schema,
                                                  const GroundedAction& action,
                                                  std::span<const EntityId> cast, std::int64_t step);

}  // namespace pwim
