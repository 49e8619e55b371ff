#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "pwim/embedding.h"

namespace pwim::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitEnvironment = 2 };

int cmd_validate(const std::string& path, bool lax, std::ostream& out, std::ostream& err);

struct EvalOptions {
  std::string domain_path;
  std::string cases_path;
  int k = 3;
  bool json = false;
  bool lax = false;
};
int cmd_eval(const EvalOptions& options, std::shared_ptr<EmbeddingProvider> provider, std::ostream& out,
             std::ostream& err);

struct PlayOptions {
  std::string domain_path;
  int k = 3;
  bool lax = false;
};
int cmd_play(const PlayOptions& options, std::shared_ptr<EmbeddingProvider> provider, std::istream& in,
             std::ostream& out, std::ostream& err);

struct ServeOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string domain_dir;
  std::string static_dir;
  int k = 3;
  bool lax = false;
};
int cmd_serve(const ServeOptions& options, std::shared_ptr<EmbeddingProvider> provider, std::ostream& out,
              std::ostream& err);

}  // namespace pwim::cli
