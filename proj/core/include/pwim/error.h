#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwim {

enum class ErrorCode {
  kMalformedFact,
  kUnsafePattern,
  kSchemaError,
  kMissingBinding,
  kStaleAction,
  kUnknownAction,
  kEmptyText,
  kProviderUnavailable,
  kDimensionMismatch,
  kZeroVector,
  kUnknownDomain,
  kNoSession,
  kEmptyIntent,
  kCorruptSave,
  kBadRequest,
};

/// Wire name of an error code, e.g. "stale-action".
std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by pwim. `code()` is stable and is what
/// the HTTP API and the CLI report; `detail()` is free text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pwim
