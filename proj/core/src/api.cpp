#include "pwim/api.h"

#include <vector>

#include "json_io.h"
#include "pwim/error.h"

namespace pwim {

using detail::json;

namespace {

std::vector<std::string_view> split_path(std::string_view path) {
  if (const auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    const auto slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash);
  }
  return parts;
}

json parse_body(const std::string& body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kBadRequest, std::string("invalid JSON body: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kBadRequest, "body must be a JSON object");
  return doc;
}

std::string required_string(const json& body, const char* field) {
  if (!body.contains(field) || !body[field].is_string()) {
    throw Error(ErrorCode::kBadRequest, std::string("field '") + field + "' must be a string");
  }
  return body[field].get<std::string>();
}

ApiResponse ok(const json& body) { return {200, body.dump()}; }

json session_json(const SessionView& v, bool full) {
  json out = {{"session_id", v.session_id}, {"step", v.step}, {"actions", detail::actions_json(v.actions)}};
  if (full) {
    out["facts"] = v.facts;
    out["transcript"] = json::array();
    for (const auto& e : v.transcript) out["transcript"].push_back(detail::event_json(e));
  }
  return out;
}

}  // namespace

ApiResponse error_response(int status, std::string_view code, std::string_view detail) {
  return {status, json{{"error", code}, {"detail", detail}}.dump()};
}

int ApiRouter::status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadRequest:
    case ErrorCode::kEmptyIntent:
    case ErrorCode::kEmptyText:
    case ErrorCode::kMalformedFact:
      return 400;
    case ErrorCode::kUnknownDomain:
    case ErrorCode::kNoSession:
    case ErrorCode::kUnknownAction:
      return 404;
    case ErrorCode::kStaleAction:
      return 409;
    case ErrorCode::kSchemaError:
    case ErrorCode::kCorruptSave:
      return 422;
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kZeroVector:
      return 502;
    case ErrorCode::kProviderUnavailable:
      return 503;
    case ErrorCode::kUnsafePattern:
    case ErrorCode::kMissingBinding:
      return 500;
  }
  return 500;
}

ApiResponse ApiRouter::handle(const ApiRequest& request) {
  const auto parts = split_path(request.path);
  const std::string& method = request.method;
  const auto not_allowed = [&] { return error_response(405, "method-not-allowed", method + " " + request.path); };

  try {
    if (parts.size() == 2 && parts[0] == "api" && parts[1] == "domains") {
      if (method != "GET") return not_allowed();
      return ok({{"domains", service_.domains().ids()}});
    }
    if (parts.size() >= 2 && parts[0] == "api" && parts[1] == "session") {
      if (parts.size() == 2) {
        if (method != "POST") return not_allowed();
        const json body = parse_body(request.body);
        return ok(session_json(service_.create_session(required_string(body, "domain")), false));
      }
      const std::string id(parts[2]);
      if (parts.size() == 3) {
        if (method != "GET") return not_allowed();
        return ok(session_json(service_.get_session(id), true));
      }
      if (parts.size() == 4 && parts[3] == "intent") {
        if (method != "POST") return not_allowed();
        const json body = parse_body(request.body);
        const auto result = service_.submit_intent(id, required_string(body, "text"));
        json ranked = json::array();
        for (const auto& r : result.ranked) ranked.push_back(detail::ranked_json(r));
        return ok({{"step", result.step}, {"ranked", std::move(ranked)}});
      }
      if (parts.size() == 4 && parts[3] == "act") {
        if (method != "POST") return not_allowed();
        const json body = parse_body(request.body);
        const std::string action_id = required_string(body, "action_id");
        if (!body.contains("step") || !body["step"].is_number_integer()) {
          throw Error(ErrorCode::kBadRequest, "field 'step' must be an integer");
        }
        std::optional<std::string> intent_text;
        if (body.contains("intent_text") && !body["intent_text"].is_null()) {
          if (!body["intent_text"].is_string()) throw Error(ErrorCode::kBadRequest, "field 'intent_text' must be a string");
          intent_text = body["intent_text"].get<std::string>();
        }
        const auto result =
            service_.perform_action(id, action_id, body["step"].get<std::int64_t>(), std::move(intent_text));
        return ok({{"event", detail::event_json(result.event)}, {"actions", detail::actions_json(result.actions)}});
      }
    }
    return error_response(404, "not-found", "no route for " + method + " " + request.path);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), e.code_name(), e.detail());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

}  // namespace pwim
