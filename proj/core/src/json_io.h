#pragma once

// JSON shapes shared by the save format and the HTTP API.

#include "json.hpp"
#include "pwim/actions.h"
#include "pwim/rank.h"

namespace pwim::detail {

using json = nlohmann::json;

inline json action_json(const GroundedAction& a) {
  return {{"action_id", a.action_id}, {"summary", a.summary}};
}

inline json actions_json(const std::vector<GroundedAction>& actions) {
  json out = json::array();
  for (const auto& a : actions) out.push_back(action_json(a));
  return out;
}

inline json event_json(const TranscriptEvent& e) {
  json out = {{"step", e.step}, {"action_id", e.action_id}, {"summary", e.summary}};
  if (e.intent_text) out["intent_text"] = *e.intent_text;
  return out;
}

inline json ranked_json(const RankedAction& r) {
  return {{"action_id", r.action.action_id},
          {"summary", r.action.summary},
          {"similarity", r.similarity},
          {"intensity", r.intensity},
          {"enlarged", r.enlarged}};
}

}  // namespace pwim::detail
