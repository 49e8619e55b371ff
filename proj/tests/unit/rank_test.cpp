#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pwim/actions.h"
#include "pwim/domain.h"
#include "pwim/error.h"
#include "pwim/rank.h"

namespace pwim {
namespace {

GroundedAction action(const std::string& summary) {
  return {summary + "()", "s", {}, summary};
}

std::vector<ScoredAction> random_scored(std::mt19937_64& rng, std::size_t n, bool ties) {
  std::uniform_real_distribution<double> sim(-1.0, 1.0);
  std::vector<ScoredAction> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = ties ? std::round(sim(rng) * 2) / 2 : sim(rng);
    out.push_back({action("a" + std::to_string(i)), s});
  }
  return out;
}

TEST(Cosine, Identity) {
  const EmbeddingVector v{{0.3, -0.2, 0.9}};
  EXPECT_DOUBLE_EQ(cosine(v, v), 1.0);
}

TEST(Cosine, OrthogonalAndAntipodal) {
  const EmbeddingVector e1{{1, 0}}, e2{{0, 1}}, neg{{-1, 0}};
  EXPECT_EQ(cosine(e1, e2), 0.0);
  EXPECT_EQ(cosine(e1, neg), -1.0);
}

TEST(Cosine, NonUnitInputsAndClamp) {
  EXPECT_DOUBLE_EQ(cosine({{3, 4}}, {{6, 8}}), 1.0);
  const EmbeddingVector v{{0.1, 0.7, 0.3, 1e-3}};
  const double c = cosine(v, v);
  EXPECT_LE(c, 1.0);
}

TEST(Cosine, Errors) {
  try {
    cosine({{1, 0}}, {{1, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    cosine({{0, 0}}, {{1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroVector);
  }
}

TEST(DisplayIntensities, Examples) {
  EXPECT_EQ(display_intensities(std::vector<double>{0.9, 0.5, 0.1}), (std::vector<double>{1.0, 0.5, 0.0}));
  EXPECT_EQ(display_intensities(std::vector<double>{0.4, 0.4}), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(display_intensities(std::vector<double>{0.7}), (std::vector<double>{0.5}));
}

TEST(DisplayIntensities, NegativeSimilaritiesAreNotClipped) {
  EXPECT_EQ(display_intensities(std::vector<double>{-0.5, 0.5, 0.0}), (std::vector<double>{0.0, 1.0, 0.5}));
}

TEST(RankActions, IdentityRanksFirst) {
  const EmbeddingVector intent = fallback_embed("greet isaac");
  std::vector<CandidateAction> cands;
  for (const char* s : {"wait", "greet isaac", "greet gabe", "order a beer"}) {
    cands.push_back({action(s), fallback_embed(s)});
  }
  const auto ranked = rank_actions(intent, cands, {});
  ASSERT_EQ(ranked.size(), 4u);
  EXPECT_EQ(ranked[0].action.summary, "greet isaac");
  EXPECT_EQ(ranked[0].similarity, 1.0);
  EXPECT_EQ(ranked[0].intensity, 1.0);
  EXPECT_TRUE(ranked[0].enlarged);
  EXPECT_TRUE(ranked[2].enlarged);
  EXPECT_FALSE(ranked[3].enlarged);
}

TEST(RankActions, Empty) { EXPECT_TRUE(rank_actions(fallback_embed("x"), {}, {}).empty()); }

TEST(RankActions, DimensionMismatch) {
  std::vector<CandidateAction> cands{{action("x"), EmbeddingVector{{1, 0}}}};
  EXPECT_THROW(rank_actions(fallback_embed("x"), cands, {}), Error);
}

TEST(RankActions, BarOrderBeerMatchesScratchOracle) {
  // Expected order and similarities from tests/oracles/trigram_oracle.py over
  // the summaries offered at the bar.
  const std::vector<std::pair<std::string, double>> expected{
      {"order a beer", 1.0},
      {"order a cider", 0.918558653544},
      {"order a glass of water", 0.866025403784},
      {"play a song on the jukebox", 0.789205187252},
      {"travel to the park", 0.727606875109},
      {"greet gabe", 0.612372435696},
      {"leave the bar", 0.58976782462},
      {"greet isaac", 0.502079011046},
      {"wait", 0.088388347648},
  };
  const Domain d = load_domain(read_file(PWIM_DATA_DIR "/domains/bar.domain.json"));
  Database db = make_database(d.initial_facts);
  db = insert(db, parse_fact("at.player!bar"));
  std::vector<CandidateAction> cands;
  for (const auto& a : enumerate_actions(db, d.schemas, d.cast)) cands.push_back({a, fallback_embed(a.summary)});
  const auto ranked = rank_actions(fallback_embed("order a beer"), cands, {3});
  ASSERT_EQ(ranked.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(ranked[i].action.summary, expected[i].first);
    EXPECT_NEAR(ranked[i].similarity, expected[i].second, 1e-11);
  }
}

TEST(RankScored, TieBreakBySummaryThenId) {
  std::vector<ScoredAction> in{{{"b2", "s", {}, "beta"}, 0.5},
                               {{"b1", "s", {}, "beta"}, 0.5},
                               {{"a1", "s", {}, "alpha"}, 0.5},
                               {{"z", "s", {}, "zeta"}, 0.9}};
  const auto out = rank_scored(in, {2});
  EXPECT_EQ(out[0].action.action_id, "z");
  EXPECT_EQ(out[1].action.action_id, "a1");
  EXPECT_EQ(out[2].action.action_id, "b1");
  EXPECT_EQ(out[3].action.action_id, "b2");
}

TEST(RankScored, Properties) {
  std::mt19937_64 rng(42);
  for (int run = 0; run < 500; ++run) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto scored = random_scored(rng, n, run % 2 == 0);
    const auto ranked = rank_scored(scored, {k});

    // Permutation of the input.
    std::vector<std::string> in_ids, out_ids;
    for (const auto& s : scored) in_ids.push_back(s.action.action_id);
    for (const auto& r : ranked) out_ids.push_back(r.action.action_id);
    std::sort(in_ids.begin(), in_ids.end());
    std::sort(out_ids.begin(), out_ids.end());
    ASSERT_EQ(in_ids, out_ids);

    // Sorted, enlarged prefix, intensities in range.
    const std::size_t want_enlarged = std::min<std::size_t>(k, n);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      if (i) EXPECT_GE(ranked[i - 1].similarity, ranked[i].similarity);
      EXPECT_EQ(ranked[i].enlarged, i < want_enlarged);
      EXPECT_GE(ranked[i].intensity, 0.0);
      EXPECT_LE(ranked[i].intensity, 1.0);
    }

    // Positive affine maps leave ordering and enlarged set unchanged.
    auto shifted = scored;
    for (auto& s : shifted) s.similarity = s.similarity * 0.25 + 0.1;
    const auto ranked2 = rank_scored(shifted, {k});
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      EXPECT_EQ(ranked2[i].action.action_id, ranked[i].action.action_id);
      EXPECT_EQ(ranked2[i].enlarged, ranked[i].enlarged);
    }

    // Determinism under shuffled input.
    auto shuffled = scored;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(rank_scored(shuffled, {k}), ranked);
  }
}

}  // namespace
}  // namespace pwim
