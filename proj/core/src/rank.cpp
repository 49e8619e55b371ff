#include "pwim/rank.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pwim/error.h"

namespace pwim {

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dimension() != v.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(u.dimension()) + " vs " + std::to_string(v.dimension()));
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    dot += u.values[i] * v.values[i];
    uu += u.values[i] * u.values[i];
    vv += v.values[i] * v.values[i];
  }
  if (uu == 0.0 || vv == 0.0) throw Error(ErrorCode::kZeroVector, "cosine of a zero vector");
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

std::vector<double> display_intensities(std::span<const double> similarities) {
  if (similarities.empty()) return {};
  const auto [lo, hi] = std::minmax_element(similarities.begin(), similarities.end());
  const double min = *lo;
  const double max = *hi;
  std::vector<double> out;
  out.reserve(similarities.size());
  for (double s : similarities) out.push_back(max == min ? 0.5 : (s - min) / (max - min));
  return out;
}

std::vector<RankedAction> rank_scored(std::vector<ScoredAction> scored, const RankingConfig& config) {
  std::sort(scored.begin(), scored.end(), [](const ScoredAction& a, const ScoredAction& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    if (a.action.summary != b.action.summary) return a.action.summary < b.action.summary;
    return a.action.action_id < b.action.action_id;
  });

  std::vector<double> sims;
  sims.reserve(scored.size());
  for (const auto& s : scored) sims.push_back(s.similarity);
  const auto intensities = display_intensities(sims);
  const std::size_t enlarged = std::min<std::size_t>(static_cast<std::size_t>(std::max(config.k, 0)), scored.size());

  std::vector<RankedAction> out;
  out.reserve(scored.size());
  for (std::size_t i = 0; i < scored.size(); ++i) {
    out.push_back({std::move(scored[i].action), scored[i].similarity, intensities[i], i < enlarged});
  }
  return out;
}

std::vector<RankedAction> rank_actions(const EmbeddingVector& intent, std::span<const CandidateAction> actions,
                                       const RankingConfig& config) {
  std::vector<ScoredAction> scored;
  scored.reserve(actions.size());
  for (const auto& c : actions) scored.push_back({c.action, cosine(intent, c.embedding)});
  return rank_scored(std::move(scored), config);
}

}  // namespace pwim
