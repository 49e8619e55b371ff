#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "pwim/actions.h"
#include "pwim/domain.h"
#include "pwim/embedding.h"
#include "pwim/query.h"
#include "pwim/rank.h"
#include "pwim/session.h"

namespace {

using namespace pwim;

const Domain& bar() {
  static const Domain d = load_domain(read_file(PWIM_DATA_DIR "/domains/bar.domain.json"));
  return d;
}

Database at_bar() {
  const Domain& d = bar();
  Database db = make_database(d.initial_facts);
  for (const auto& a : enumerate_actions(db, d.schemas, d.cast)) {
    if (a.summary == "travel to the bar") return apply_action(db, *d.find_schema(a.schema_id), a, d.cast, 0).first;
  }
  return db;
}

void BM_Query(benchmark::State& state) {
  const Database db = at_bar();
  const std::vector<Pattern> patterns{parse_pattern("at.player!Place"), parse_pattern("at.Person!Place"),
                                      parse_pattern("character.Person"), parse_pattern("not greeted.player.Person")};
  for (auto _ : state) benchmark::DoNotOptimize(query(db, patterns));
}
BENCHMARK(BM_Query);

void BM_EnumerateBar(benchmark::State& state) {
  const Database db = at_bar();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_actions(db, bar().schemas, bar().cast));
}
BENCHMARK(BM_EnumerateBar);

void BM_FallbackEmbed(benchmark::State& state) {
  const std::string text(static_cast<std::size_t>(state.range(0)), 'a');
  for (auto _ : state) benchmark::DoNotOptimize(fallback_embed(text));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FallbackEmbed)->Arg(16)->Arg(256);

void BM_RankActions(benchmark::State& state) {
  FallbackProvider provider;
  const auto actions = enumerate_actions(at_bar(), bar().schemas, bar().cast);
  std::vector<CandidateAction> candidates;
  for (const auto& a : actions) candidates.push_back({a, provider.embed(a.summary)});
  const auto intent = provider.embed("get hammered");
  for (auto _ : state) benchmark::DoNotOptimize(rank_actions(intent, candidates, RankingConfig{}));
}
BENCHMARK(BM_RankActions);

void BM_SubmitIntent(benchmark::State& state) {
  DomainRegistry registry;
  registry.add("bar", bar());
  PlayService service(std::move(registry), std::make_shared<CachingProvider>(std::make_shared<FallbackProvider>()));
  const auto sid = service.create_session("bar").session_id;
  for (auto _ : state) benchmark::DoNotOptimize(service.submit_intent(sid, "gimme something autumnal"));
}
BENCHMARK(BM_SubmitIntent);

}  // namespace

BENCHMARK_MAIN();
