#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwim/domain.h"
#include "pwim/embedding.h"

namespace pwim::cli {

/// One intent check: perform `setup` (by summary) from a fresh session, rank
/// `intent`, look up where `expected_summary` lands.
struct EvalCase {
  std::vector<std::string> setup;
  std::string intent;
  std::string expected_summary;
  bool expect_top1 = true;
};

struct EvalRow {
  EvalCase input;
  std::optional<int> rank;  // 1-based; empty when the case is invalid
  std::optional<double> similarity;
  std::string top_summary;
  std::string invalid_reason;

  bool valid() const { return rank.has_value(); }
};

struct EvalReport {
  int k = 3;
  std::vector<EvalRow> rows;
  double top1_accuracy = 0.0;  // over valid rows
  double topk_accuracy = 0.0;
  int invalid = 0;

  /// Every expect_top1 case is valid and ranked first.
  bool passed() const;
};

/// Throws Error(kSchemaError) with a JSON path.
std::vector<EvalCase> parse_cases(std::string_view json);

EvalReport run_eval(const Domain& domain, const std::vector<EvalCase>& cases,
                    std::shared_ptr<EmbeddingProvider> provider, int k);

/// {"cases":[{"intent","expected_summary","rank","similarity"}],
///  "top1_accuracy","topk_accuracy","invalid"}
std::string report_json(const EvalReport& report);
std::string report_table(const EvalReport& report);

}  // namespace pwim::cli
