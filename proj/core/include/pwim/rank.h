#pragma once

#include <span>
#include <vector>

#include "pwim/embedding.h"
#include "pwim/schema.h"

namespace pwim {

struct RankingConfig {
  /// Number of leading entries flagged as enlarged.
  int k = 3;
};

struct RankedAction {
  GroundedAction action;
  double similarity = 0.0;
  double intensity = 0.0;
  bool enlarged = false;

  bool operator==(const RankedAction&) const = default;
};

struct ScoredAction {
  GroundedAction action;
  double similarity = 0.0;
};

struct CandidateAction {
  GroundedAction action;
  EmbeddingVector embedding;
};

/// dot(u, v) / (|u| |v|), clamped to [-1, 1]. Throws Error(kDimensionMismatch)
/// or Error(kZeroVector).
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

/// Per-list min-max normalization; all-equal lists map to 0.5.
std::vector<double> display_intensities(std::span<const double> similarities);

/// Sorts by similarity descending, ties by summary then action_id; sets
/// intensities and flags the first min(k, N) entries as enlarged.
std::vector<RankedAction> rank_scored(std::vector<ScoredAction> scored, const RankingConfig& config);

std::vector<RankedAction> rank_actions(const EmbeddingVector& intent, std::span<const CandidateAction> actions,
                                       const RankingConfig& config);

}  // namespace pwim
