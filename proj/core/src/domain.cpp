#include "pwim/domain.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pwim/database.h"
#include "pwim/error.h"

namespace pwim {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::kSchemaError, path + ": " + reason);
}

std::string at(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string at(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

void check_fields(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required, const LoadOptions& options) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& key : required) {
    if (!obj.contains(std::string(key))) fail(at(path, key), "missing required field");
  }
  if (!options.strict) return;
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(at(path, key), "unknown field");
  }
}

const std::string& as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get_ref<const std::string&>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaError) throw;
    fail(path, e.detail());
  }
}

ActionSchema parse_schema(const json& obj, const std::string& path, const LoadOptions& options) {
  check_fields(obj, path, {"id", "roles", "preconditions", "effects", "summary_template"},
               {"id", "summary_template"}, options);
  ActionSchema schema;
  schema.id = as_string(obj["id"], at(path, "id"));
  schema.summary_template = as_string(obj["summary_template"], at(path, "summary_template"));
  if (obj.contains("roles")) {
    const auto& roles = as_array(obj["roles"], at(path, "roles"));
    for (std::size_t i = 0; i < roles.size(); ++i) {
      schema.roles.push_back(as_string(roles[i], at(at(path, "roles"), i)));
    }
  }
  if (obj.contains("preconditions")) {
    const auto& pre = as_array(obj["preconditions"], at(path, "preconditions"));
    for (std::size_t i = 0; i < pre.size(); ++i) {
      const std::string p = at(at(path, "preconditions"), i);
      schema.preconditions.push_back(with_path(p, [&] { return parse_pattern(as_string(pre[i], p)); }));
    }
  }
  if (obj.contains("effects")) {
    const auto& effects = as_array(obj["effects"], at(path, "effects"));
    for (std::size_t i = 0; i < effects.size(); ++i) {
      const std::string p = at(at(path, "effects"), i);
      check_fields(effects[i], p, {"op", "fact"}, {"op", "fact"}, options);
      Effect effect;
      const std::string& op = as_string(effects[i]["op"], at(p, "op"));
      if (op == "insert") {
        effect.op = EffectOp::kInsert;
      } else if (op == "retract") {
        effect.op = EffectOp::kRetract;
      } else {
        fail(at(p, "op"), "expected \"insert\" or \"retract\", got \"" + op + "\"");
      }
      effect.fact = with_path(at(p, "fact"), [&] { return parse_pattern(as_string(effects[i]["fact"], at(p, "fact"))); });
      schema.effects.push_back(std::move(effect));
    }
  }
  return schema;
}

void validate_schema(const ActionSchema& schema, const std::string& path) {
  if (!is_key_token(schema.id)) fail(at(path, "id"), "schema id '" + schema.id + "' is not a [a-z0-9_]+ token");

  std::set<std::string> bound;
  for (std::size_t i = 0; i < schema.roles.size(); ++i) {
    const std::string& role = schema.roles[i];
    if (!is_variable_token(role)) fail(at(at(path, "roles"), i), "role '" + role + "' is not a variable");
    if (!bound.insert(role).second) fail(at(at(path, "roles"), i), "duplicate role " + role);
  }
  for (const auto& p : schema.preconditions) {
    if (!p.negated) p.collect_variables(bound);
  }
  for (std::size_t i = 0; i < schema.preconditions.size(); ++i) {
    const Pattern& p = schema.preconditions[i];
    if (!p.negated) continue;
    for (const auto& v : p.variables()) {
      if (!bound.count(v)) {
        fail(at(at(path, "preconditions"), i), "unbound variable " + v + " in negative precondition");
      }
    }
  }
  for (std::size_t i = 0; i < schema.effects.size(); ++i) {
    const Effect& e = schema.effects[i];
    const std::string p = at(at(at(path, "effects"), i), "fact");
    if (e.fact.negated) fail(p, "effects cannot be negative patterns");
    for (const auto& v : e.fact.variables()) {
      if (!bound.count(v)) fail(p, "unbound variable " + v);
    }
  }
  const std::string tpath = at(path, "summary_template");
  const auto placeholders = with_path(tpath, [&] { return summary_placeholders(schema.summary_template); });
  for (const auto& name : placeholders) {
    if (!bound.count(name)) fail(tpath, "unbound placeholder {" + name + "}");
  }
}

}  // namespace

void validate_domain(const Domain& domain) {
  std::set<std::string> cast;
  for (std::size_t i = 0; i < domain.cast.size(); ++i) {
    if (!is_key_token(domain.cast[i])) fail(at("$.cast", i), "entity '" + domain.cast[i] + "' is not a token");
    if (!cast.insert(domain.cast[i]).second) fail(at("$.cast", i), "duplicate entity " + domain.cast[i]);
  }
  if (!cast.count(domain.player)) fail("$.player", "player '" + domain.player + "' is not in cast");

  std::set<Fact> initial;
  for (std::size_t i = 0; i < domain.initial_facts.size(); ++i) {
    const Fact& f = domain.initial_facts[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (exclusion_conflict(domain.initial_facts[j], f)) {
        fail(at("$.initial_facts", i), "'" + f.str() + "' violates exclusion with '" +
                                           domain.initial_facts[j].str() + "'");
      }
    }
    initial.insert(f);
  }

  std::set<std::string> ids;
  for (std::size_t i = 0; i < domain.schemas.size(); ++i) {
    const std::string path = at("$.schemas", i);
    validate_schema(domain.schemas[i], path);
    if (!ids.insert(domain.schemas[i].id).second) {
      fail(at(path, "id"), "duplicate schema id '" + domain.schemas[i].id + "'");
    }
  }
}

Domain load_domain(std::string_view text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("invalid JSON: ") + e.what());
  }
  check_fields(doc, "$", {"name", "cast", "player", "initial_facts", "schemas"},
               {"name", "cast", "player", "initial_facts", "schemas"}, options);

  Domain domain;
  domain.name = as_string(doc["name"], "$.name");
  domain.player = as_string(doc["player"], "$.player");
  const auto& cast = as_array(doc["cast"], "$.cast");
  for (std::size_t i = 0; i < cast.size(); ++i) domain.cast.push_back(as_string(cast[i], at("$.cast", i)));
  const auto& facts = as_array(doc["initial_facts"], "$.initial_facts");
  for (std::size_t i = 0; i < facts.size(); ++i) {
    const std::string p = at("$.initial_facts", i);
    domain.initial_facts.push_back(with_path(p, [&] { return parse_fact(as_string(facts[i], p)); }));
  }
  const auto& schemas = as_array(doc["schemas"], "$.schemas");
  for (std::size_t i = 0; i < schemas.size(); ++i) {
    domain.schemas.push_back(parse_schema(schemas[i], at("$.schemas", i), options));
  }
  validate_domain(domain);
  return domain;
}

std::string serialize_domain(const Domain& domain) {
  ordered_json doc;
  doc["name"] = domain.name;
  doc["player"] = domain.player;
  doc["cast"] = domain.cast;
  doc["initial_facts"] = ordered_json::array();
  for (const auto& f : domain.initial_facts) doc["initial_facts"].push_back(f.str());
  doc["schemas"] = ordered_json::array();
  for (const auto& s : domain.schemas) {
    ordered_json js;
    js["id"] = s.id;
    js["roles"] = s.roles;
    js["preconditions"] = ordered_json::array();
    for (const auto& p : s.preconditions) js["preconditions"].push_back(p.str());
    js["effects"] = ordered_json::array();
    for (const auto& e : s.effects) {
      ordered_json je;
      je["op"] = e.op == EffectOp::kInsert ? "insert" : "retract";
      je["fact"] = e.fact.str();
      js["effects"].push_back(std::move(je));
    }
    js["summary_template"] = s.summary_template;
    doc["schemas"].push_back(std::move(js));
  }
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pwim
