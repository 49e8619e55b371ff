#include "cli/eval.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "pwim/error.h"
#include "pwim/session.h"

namespace pwim::cli {

using json = nlohmann::ordered_json;

bool EvalReport::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const EvalRow& r) { return !r.input.expect_top1 || r.rank == 1; });
}

std::vector<EvalCase> parse_cases(std::string_view text) {
  const auto fail = [](const std::string& path, const std::string& why) {
    return Error(ErrorCode::kSchemaError, path + ": " + why);
  };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw fail("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw fail("$", "expected an array of cases");

  std::vector<EvalCase> cases;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "$[" + std::to_string(i) + "]";
    const json& c = doc[i];
    if (!c.is_object()) throw fail(path, "expected an object");
    for (const auto& [key, value] : c.items()) {
      if (key != "setup" && key != "intent" && key != "expected_summary" && key != "expect_top1") {
        throw fail(path + "." + key, "unknown field");
      }
    }
    EvalCase ec;
    if (!c.contains("intent") || !c["intent"].is_string()) throw fail(path + ".intent", "expected a string");
    if (!c.contains("expected_summary") || !c["expected_summary"].is_string()) {
      throw fail(path + ".expected_summary", "expected a string");
    }
    ec.intent = c["intent"].get<std::string>();
    ec.expected_summary = c["expected_summary"].get<std::string>();
    if (c.contains("expect_top1")) {
      if (!c["expect_top1"].is_boolean()) throw fail(path + ".expect_top1", "expected a boolean");
      ec.expect_top1 = c["expect_top1"].get<bool>();
    }
    if (c.contains("setup")) {
      if (!c["setup"].is_array()) throw fail(path + ".setup", "expected an array");
      for (std::size_t j = 0; j < c["setup"].size(); ++j) {
        if (!c["setup"][j].is_string()) throw fail(path + ".setup[" + std::to_string(j) + "]", "expected a string");
        ec.setup.push_back(c["setup"][j].get<std::string>());
      }
    }
    cases.push_back(std::move(ec));
  }
  return cases;
}

EvalReport run_eval(const Domain& domain, const std::vector<EvalCase>& cases,
                    std::shared_ptr<EmbeddingProvider> provider, int k) {
  DomainRegistry registry;
  registry.add("eval", domain);
  PlayService service(std::move(registry), std::move(provider), RankingConfig{k}, sequential_ids("eval-"));

  EvalReport report;
  report.k = k;
  int top1 = 0;
  int topk = 0;
  for (const auto& c : cases) {
    EvalRow row;
    row.input = c;
    const std::string sid = service.create_session("eval").session_id;

    bool setup_ok = true;
    for (const auto& summary : c.setup) {
      const auto actions = service.available_actions(sid);
      auto it = std::find_if(actions.begin(), actions.end(),
                             [&](const GroundedAction& a) { return a.summary == summary; });
      if (it == actions.end()) {
        row.invalid_reason = "setup action '" + summary + "' is not offered";
        setup_ok = false;
        break;
      }
      service.perform_action(sid, it->action_id);
    }

    if (setup_ok) {
      const auto ranked = service.submit_intent(sid, c.intent).ranked;
      auto it = std::find_if(ranked.begin(), ranked.end(),
                             [&](const RankedAction& r) { return r.action.summary == c.expected_summary; });
      if (it == ranked.end()) {
        row.invalid_reason = "expected summary '" + c.expected_summary + "' is not offered";
      } else {
        row.rank = static_cast<int>(it - ranked.begin()) + 1;
        row.similarity = it->similarity;
        row.top_summary = ranked.front().action.summary;
      }
    }

    if (row.valid()) {
      top1 += *row.rank == 1;
      topk += *row.rank <= k;
    } else {
      ++report.invalid;
    }
    report.rows.push_back(std::move(row));
  }
  const int valid = static_cast<int>(cases.size()) - report.invalid;
  if (valid > 0) {
    report.top1_accuracy = static_cast<double>(top1) / valid;
    report.topk_accuracy = static_cast<double>(topk) / valid;
  }
  return report;
}

std::string report_json(const EvalReport& report) {
  json doc;
  doc["cases"] = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["intent"] = r.input.intent;
    row["expected_summary"] = r.input.expected_summary;
    row["rank"] = r.rank ? json(*r.rank) : json(nullptr);
    row["similarity"] = r.similarity ? json(*r.similarity) : json(nullptr);
    doc["cases"].push_back(std::move(row));
  }
  doc["top1_accuracy"] = report.top1_accuracy;
  doc["topk_accuracy"] = report.topk_accuracy;
  doc["invalid"] = report.invalid;
  return doc.dump(2) + "\n";
}

std::string report_table(const EvalReport& report) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-28s %-30s %5s %8s  %s\n", "intent", "expected", "rank", "sim", "status");
  out << line;
  for (const auto& r : report.rows) {
    std::string status;
    if (!r.valid()) {
      status = "INVALID (" + r.invalid_reason + ")";
    } else if (*r.rank == 1) {
      status = "top-1";
    } else {
      status = (r.input.expect_top1 ? "FAIL, top: " : "miss (expected), top: ") + r.top_summary;
    }
    char sim[32] = "-";
    if (r.similarity) std::snprintf(sim, sizeof sim, "%.4f", *r.similarity);
    std::snprintf(line, sizeof line, "%-28s %-30s %5s %8s  %s\n", r.input.intent.c_str(),
                  r.input.expected_summary.c_str(), r.rank ? std::to_string(*r.rank).c_str() : "-", sim,
                  status.c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "top-1 accuracy %.3f  top-%d accuracy %.3f  invalid %d\n", report.top1_accuracy,
                report.k, report.topk_accuracy, report.invalid);
  out << line;
  return out.str();
}

}  // namespace pwim::cli
