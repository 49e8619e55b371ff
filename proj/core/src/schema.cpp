#include "pwim/schema.h"

#include <algorithm>

#include "pwim/error.h"

namespace pwim {

const ActionSchema* Domain::find_schema(std::string_view id) const {
  auto it = std::find_if(schemas.begin(), schemas.end(),
                         [&](const ActionSchema& s) { return s.id == id; });
  return it == schemas.end() ? nullptr : &*it;
}

namespace {

template <typename OnText, typename OnPlaceholder>
void scan_template(std::string_view tpl, OnText on_text, OnPlaceholder on_placeholder) {
  std::size_t pos = 0;
  while (pos < tpl.size()) {
    const std::size_t open = tpl.find_first_of("{}", pos);
    if (open == std::string_view::npos) {
      on_text(tpl.substr(pos));
      return;
    }
    if (tpl[open] == '}') {
      throw Error(ErrorCode::kSchemaError, "unbalanced '}' in summary template '" + std::string(tpl) + "'");
    }
    on_text(tpl.substr(pos, open - pos));
    const std::size_t close = tpl.find_first_of("{}", open + 1);
    if (close == std::string_view::npos || tpl[close] != '}') {
      throw Error(ErrorCode::kSchemaError, "unbalanced '{' in summary template '" + std::string(tpl) + "'");
    }
    const std::string_view name = tpl.substr(open + 1, close - open - 1);
    if (!is_variable_token(name)) {
      throw Error(ErrorCode::kSchemaError, "placeholder '{" + std::string(name) + "}' is not a variable");
    }
    on_placeholder(name);
    pos = close + 1;
  }
}

}  // namespace

std::vector<std::string> summary_placeholders(std::string_view summary_template) {
  std::vector<std::string> out;
  scan_template(
      summary_template, [](std::string_view) {},
      [&](std::string_view name) { out.emplace_back(name); });
  return out;
}

std::string render_summary(std::string_view summary_template, const Binding& binding) {
  std::string out;
  scan_template(
      summary_template, [&](std::string_view text) { out += text; },
      [&](std::string_view name) {
        auto it = binding.find(std::string(name));
        if (it == binding.end()) {
          throw Error(ErrorCode::kMissingBinding, "no binding for {" + std::string(name) + "}");
        }
        out += it->second;
      });
  return out;
}

std::string render_summary(const ActionSchema& schema, const Binding& binding) {
  return render_summary(schema.summary_template, binding);
}

std::string make_action_id(std::string_view schema_id, const Binding& binding) {
  std::string out(schema_id);
  out.push_back('(');
  bool first = true;
  for (const auto& [name, value] : binding) {
    if (!first) out.push_back(',');
    first = false;
    out += name;
    out.push_back('=');
    out += value;
  }
  out.push_back(')');
  return out;
}

std::optional<ParsedActionId> parse_action_id(std::string_view action_id) {
  const std::size_t open = action_id.find('(');
  if (open == std::string_view::npos || action_id.empty() || action_id.back() != ')') return std::nullopt;
  ParsedActionId parsed;
  parsed.schema_id = std::string(action_id.substr(0, open));
  if (!is_key_token(parsed.schema_id)) return std::nullopt;
  std::string_view body = action_id.substr(open + 1, action_id.size() - open - 2);
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    const std::string_view name = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (!is_variable_token(name) || !is_key_token(value)) return std::nullopt;
    if (!parsed.binding.emplace(name, value).second) return std::nullopt;
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) return std::nullopt;
  }
  if (make_action_id(parsed.schema_id, parsed.binding) != action_id) return std::nullopt;
  return parsed;
}

}  // namespace pwim
