#include "pwim/error.h"

namespace pwim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedFact: return "malformed-fact";
    case ErrorCode::kUnsafePattern: return "unsafe-pattern";
    case ErrorCode::kSchemaError: return "schema-error";
    case ErrorCode::kMissingBinding: return "missing-binding";
    case ErrorCode::kStaleAction: return "stale-action";
    case ErrorCode::kUnknownAction: return "unknown-action";
    case ErrorCode::kEmptyText: return "empty-text";
    case ErrorCode::kProviderUnavailable: return "provider-unavailable";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kZeroVector: return "zero-vector";
    case ErrorCode::kUnknownDomain: return "unknown-domain";
    case ErrorCode::kNoSession: return "no-session";
    case ErrorCode::kEmptyIntent: return "empty-intent";
    case ErrorCode::kCorruptSave: return "corrupt-save";
    case ErrorCode::kBadRequest: return "bad-request";
  }
  return "unknown";
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace pwim
