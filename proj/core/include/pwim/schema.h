#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwim/fact.h"
#include "pwim/query.h"

namespace pwim {

using EntityId = std::string;

enum class EffectOp { kInsert, kRetract };

struct Effect {
  EffectOp op = EffectOp::kInsert;
  Pattern fact;

  bool operator==(const Effect&) const = default;
};

/// An authored action template. Role variables range over the domain cast;
/// every other variable is bound by the positive preconditions.
struct ActionSchema {
  std::string id;
  std::vector<std::string> roles;
  std::vector<Pattern> preconditions;
  std::vector<Effect> effects;
  std::string summary_template;

  bool operator==(const ActionSchema&) const = default;
};

struct Domain {
  std::string name;
  std::vector<EntityId> cast;
  EntityId player;
  std::vector<Fact> initial_facts;
  std::vector<ActionSchema> schemas;

  const ActionSchema* find_schema(std::string_view id) const;

  bool operator==(const Domain&) const = default;
};

/// A schema instantiated with concrete bindings.
struct GroundedAction {
  std::string action_id;
  std::string schema_id;
  Binding binding;
  std::string summary;

  bool operator==(const GroundedAction&) const = default;
};

/// Expands every `{Var}` placeholder. Throws Error(kMissingBinding) for an
/// unbound placeholder and Error(kSchemaError) for unbalanced braces.
std::string render_summary(std::string_view summary_template, const Binding& binding);
std::string render_summary(const ActionSchema& schema, const Binding& binding);

/// Placeholder names in order of appearance. Throws Error(kSchemaError) on
/// unbalanced braces or a placeholder that is not a variable token.
std::vector<std::string> summary_placeholders(std::string_view summary_template);

/// "schema_id(A=x,B=y)", variables in name order.
std::string make_action_id(std::string_view schema_id, const Binding& binding);

struct ParsedActionId {
  std::string schema_id;
  Binding binding;
};
std::optional<ParsedActionId> parse_action_id(std::string_view action_id);

}  // namespace pwim
