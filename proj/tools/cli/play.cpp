#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "pwim/domain.h"
#include "pwim/error.h"
#include "pwim/session.h"

namespace pwim::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_index(const std::string& s, std::size_t& out) {
  if (s.empty() || s.size() > 6) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  out = std::stoul(s);
  return true;
}

void print_actions(std::ostream& out, std::int64_t step, const std::vector<GroundedAction>& actions) {
  out << "-- step " << step << " --\n";
  if (actions.empty()) out << "  (no actions available)\n";
  for (std::size_t i = 0; i < actions.size(); ++i) out << "  " << i + 1 << ". " << actions[i].summary << "\n";
}

void print_ranked(std::ostream& out, const std::vector<RankedAction>& ranked) {
  char line[512];
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& r = ranked[i];
    std::snprintf(line, sizeof line, "  %zu.%s %-40s sim %+.3f  shade %.2f\n", i + 1, r.enlarged ? "*" : " ",
                  r.action.summary.c_str(), r.similarity, r.intensity);
    out << line;
  }
}

}  // namespace

int cmd_play(const PlayOptions& options, std::shared_ptr<EmbeddingProvider> provider, std::istream& in,
             std::ostream& out, std::ostream& err) {
  Domain domain;
  try {
    domain = load_domain(read_file(options.domain_path), LoadOptions{!options.lax});
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitEnvironment;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }

  DomainRegistry registry;
  registry.add("play", domain);
  PlayService service(std::move(registry), std::move(provider), RankingConfig{options.k}, sequential_ids("play-"));
  const std::string sid = service.create_session("play").session_id;

  out << "[" << domain.name << "] type what you want to do; a number performs that action; "
      << ":facts, :save <file>, :quit\n";
  std::vector<GroundedAction> menu = service.available_actions(sid);
  std::optional<std::string> last_intent;
  print_actions(out, 0, menu);

  std::string raw;
  while (out << "> " << std::flush, std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line == ":quit") break;
    try {
      if (line == ":facts") {
        for (const auto& f : service.get_session(sid).facts) out << "  " << f << "\n";
        continue;
      }
      if (line.starts_with(":save")) {
        const std::string path = trim(line.substr(5));
        std::ofstream file(path, std::ios::binary);
        if (path.empty() || !(file << service.save_session(sid))) {
          out << "error: cannot write '" << path << "'\n";
        } else {
          out << "saved to " << path << "\n";
        }
        continue;
      }
      std::size_t index = 0;
      if (parse_index(line, index)) {
        if (index == 0 || index > menu.size()) {
          out << "no action " << line << "\n";
          continue;
        }
        const auto result = service.perform_action(sid, menu[index - 1].action_id, std::nullopt, last_intent);
        out << "performed: " << result.event.summary << "\n";
        menu = result.actions;
        last_intent.reset();
        print_actions(out, result.event.step + 1, menu);
        continue;
      }
      const auto ranked = service.submit_intent(sid, line).ranked;
      menu.clear();
      for (const auto& r : ranked) menu.push_back(r.action);
      last_intent = line;
      print_ranked(out, ranked);
    } catch (const Error& e) {
      out << "error: " << e.code_name() << ": " << e.detail() << "\n";
    }
  }
  out << "\ntranscript:\n";
  for (const auto& e : service.get_session(sid).transcript) {
    out << "  " << e.step << ". " << e.summary;
    if (e.intent_text) out << "  (\"" << *e.intent_text << "\")";
    out << "\n";
  }
  return kExitOk;
}

}  // namespace pwim::cli
