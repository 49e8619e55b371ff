#include "pwim/actions.h"

#include <algorithm>
#include <set>

#include "pwim/error.h"
#include "pwim/query.h"

namespace pwim {
namespace {

bool in_cast(std::span<const EntityId> cast, const std::string& value) {
  return std::find(cast.begin(), cast.end(), value) != cast.end();
}

// Seeds binding every role the positive preconditions leave free to each
// cast member in turn.
void expand_free_roles(const std::vector<std::string>& free_roles, std::size_t i,
                       std::span<const EntityId> cast, Binding& current, std::vector<Binding>& out) {
  if (i == free_roles.size()) {
    out.push_back(current);
    return;
  }
  for (const auto& entity : cast) {
    current[free_roles[i]] = entity;
    expand_free_roles(free_roles, i + 1, cast, current, out);
  }
  current.erase(free_roles[i]);
}

}  // namespace

std::vector<std::string> schema_variables(const ActionSchema& schema) {
  std::set<std::string> vars(schema.roles.begin(), schema.roles.end());
  for (const auto& p : schema.preconditions) {
    if (!p.negated) p.collect_variables(vars);
  }
  return {vars.begin(), vars.end()};
}

std::vector<Binding> ground_schema(const Database& db, const ActionSchema& schema,
                                   std::span<const EntityId> cast) {
  std::set<std::string> positive_vars;
  for (const auto& p : schema.preconditions) {
    if (!p.negated) p.collect_variables(positive_vars);
  }
  std::vector<std::string> free_roles;
  for (const auto& r : schema.roles) {
    if (!positive_vars.count(r)) free_roles.push_back(r);
  }

  std::vector<Binding> seeds;
  Binding scratch;
  expand_free_roles(free_roles, 0, cast, scratch, seeds);

  std::set<Binding> results;
  for (const auto& seed : seeds) {
    for (auto& b : query(db, schema.preconditions, seed)) {
      const bool roles_ok = std::all_of(schema.roles.begin(), schema.roles.end(),
                                        [&](const std::string& r) { return in_cast(cast, b.at(r)); });
      if (roles_ok) results.insert(std::move(b));
    }
  }
  return {results.begin(), results.end()};
}

std::vector<GroundedAction> enumerate_actions(const Database& db, std::span<const ActionSchema> schemas,
                                              std::span<const EntityId> cast) {
  std::vector<GroundedAction> out;
  for (const auto& schema : schemas) {
    for (auto& binding : ground_schema(db, schema, cast)) {
      GroundedAction action;
      action.action_id = make_action_id(schema.id, binding);
      action.schema_id = schema.id;
      action.summary = render_summary(schema, binding);
      action.binding = std::move(binding);
      out.push_back(std::move(action));
    }
  }
  return out;
}

bool preconditions_hold(const Database& db, const ActionSchema& schema, const Binding& binding,
                        std::span<const EntityId> cast) {
  for (const auto& r : schema.roles) {
    auto it = binding.find(r);
    if (it == binding.end() || !in_cast(cast, it->second)) return false;
  }
  return holds(db, schema.preconditions, binding);
}

std::optional<GroundedAction> resolve_action(const Domain& domain, std::string_view action_id) {
  auto parsed = parse_action_id(action_id);
  if (!parsed) return std::nullopt;
  const ActionSchema* schema = domain.find_schema(parsed->schema_id);
  if (!schema) return std::nullopt;
  const auto vars = schema_variables(*schema);
  if (vars.size() != parsed->binding.size()) return std::nullopt;
  for (const auto& v : vars) {
    if (!parsed->binding.count(v)) return std::nullopt;
  }
  GroundedAction action;
  action.action_id = std::string(action_id);
  action.schema_id = schema->id;
  action.summary = render_summary(*schema, parsed->binding);
  action.binding = std::move(parsed->binding);
  return action;
}

std::pair<Database, TranscriptEvent> apply_action(Database db, const ActionSchema& schema,
                                                  const GroundedAction& action,
                                                  std::span<const EntityId> cast, std::int64_t step) {
  if (!preconditions_hold(db, schema, action.binding, cast)) {
    throw Error(ErrorCode::kStaleAction, "preconditions of " + action.action_id + " no longer hold");
  }
  for (const auto& effect : schema.effects) {
    const Fact fact = substitute(effect.fact, action.binding);
    if (effect.op == EffectOp::kInsert) {
      db = insert(std::move(db), fact);
    } else {
      db = retract(std::move(db), to_pattern(fact));
    }
  }
  TranscriptEvent event;
  event.step = step;
  event.action_id = action.action_id;
  event.summary = action.summary;
  return {std::move(db), std::move(event)};
}

}  // namespace pwim
