#include "cli/commands.h"

#include <fstream>
#include <iostream>

#include "cli/eval.h"
#include "pwim/api.h"
#include "pwim/domain.h"
#include "pwim/error.h"
#include "pwim/session.h"

namespace pwim::cli {

int cmd_validate(const std::string& path, bool lax, std::ostream& out, std::ostream& err) {
  try {
    const Domain d = load_domain(read_file(path), LoadOptions{!lax});
    out << path << ": ok (" << d.schemas.size() << " schemas, " << d.initial_facts.size() << " facts, "
        << d.cast.size() << " cast)\n";
    return kExitOk;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitEnvironment;
  } catch (const Error& e) {
    err << path << ": " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_eval(const EvalOptions& options, std::shared_ptr<EmbeddingProvider> provider, std::ostream& out,
             std::ostream& err) {
  try {
    const Domain domain = load_domain(read_file(options.domain_path), LoadOptions{!options.lax});
    const auto cases = parse_cases(read_file(options.cases_path));
    const EvalReport report = run_eval(domain, cases, std::move(provider), options.k);
    out << (options.json ? report_json(report) : report_table(report));
    return report.passed() ? kExitOk : kExitFailure;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitEnvironment;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::kProviderUnavailable ? kExitEnvironment : kExitFailure;
  }
}

int cmd_serve(const ServeOptions& options, std::shared_ptr<EmbeddingProvider> provider, std::ostream& out,
              std::ostream& err) {
  DomainRegistry registry;
  try {
    registry = DomainRegistry::load_directory(options.domain_dir, LoadOptions{!options.lax});
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: cannot read domain directory: " << e.what() << "\n";
    return kExitEnvironment;
  }
  PlayService service(std::move(registry), std::move(provider), RankingConfig{options.k});
  ApiRouter router(service);
  HttpServer server(router, {options.host, options.port, options.static_dir});
  if (!server.bind()) {
    err << "error: cannot bind " << options.host << ":" << options.port << " (port in use?)\n";
    return kExitFailure;
  }
  out << "serving " << service.domains().ids().size() << " domain(s) on http://" << options.host << ":"
      << server.port() << "\n"
      << std::flush;
  server.listen();
  return kExitOk;
}

}  // namespace pwim::cli
