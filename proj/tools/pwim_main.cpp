// pwim: validate domains, batch-evaluate intents, play in the terminal, or
// serve the HTTP API.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.h"

#ifndef PWIM_DEFAULT_DOMAIN_DIR
#define PWIM_DEFAULT_DOMAIN_DIR "data/domains"
#endif

int main(int argc, char** argv) {
  using namespace pwim::cli;

  CLI::App app{"Play What I Mean: map free-text intents onto available game actions"};
  app.require_subcommand(1);

  bool lax = false;
  app.add_flag("--lax", lax, "Ignore unknown fields in domain files");

  auto* validate = app.add_subcommand("validate", "Validate a domain file");
  std::string validate_path;
  validate->add_option("domain", validate_path, "Domain JSON file")->required();

  auto* eval = app.add_subcommand("eval", "Rank intent phrases against expected actions");
  EvalOptions eval_opts;
  eval->add_option("domain", eval_opts.domain_path, "Domain JSON file")->required();
  eval->add_option("cases", eval_opts.cases_path, "Cases JSON file")->required();
  eval->add_option("--k", eval_opts.k, "Top-K cutoff")->check(CLI::PositiveNumber);
  eval->add_flag("--json", eval_opts.json, "Emit the JSON report");

  auto* play = app.add_subcommand("play", "Interactive terminal play");
  PlayOptions play_opts;
  play->add_option("domain", play_opts.domain_path, "Domain JSON file")->required();
  play->add_option("--k", play_opts.k, "Number of enlarged matches")->check(CLI::PositiveNumber);

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API (and web assets)");
  ServeOptions serve_opts;
  serve_opts.domain_dir = PWIM_DEFAULT_DOMAIN_DIR;
  serve->add_option("--port", serve_opts.port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", serve_opts.host, "Bind address");
  serve->add_option("--domain-dir", serve_opts.domain_dir, "Directory of *.domain.json files");
  serve->add_option("--static-dir", serve_opts.static_dir, "Static web assets served at /");
  serve->add_option("--k", serve_opts.k, "Number of enlarged matches")->check(CLI::PositiveNumber);

  for (auto* sub : {validate, eval, play, serve}) sub->add_flag("--lax", lax, "Ignore unknown fields in domain files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitEnvironment;
  }

  if (*validate) return cmd_validate(validate_path, lax, std::cout, std::cerr);

  auto provider = pwim::make_provider_from_env();
  if (*eval) {
    eval_opts.lax = lax;
    return cmd_eval(eval_opts, provider, std::cout, std::cerr);
  }
  if (*play) {
    play_opts.lax = lax;
    return cmd_play(play_opts, provider, std::cin, std::cout, std::cerr);
  }
  serve_opts.lax = lax;
  if (serve_opts.static_dir.empty()) {
    const auto web = std::filesystem::path(serve_opts.domain_dir) / ".." / ".." / "web";
    if (std::filesystem::is_directory(web)) serve_opts.static_dir = web.string();
  }
  return cmd_serve(serve_opts, provider, std::cout, std::cerr);
}
