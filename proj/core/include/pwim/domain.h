#pragma once

#include <string>
#include <string_view>

#include "pwim/schema.h"

namespace pwim {

struct LoadOptions {
  /// Reject unknown JSON fields.
  bool strict = true;
};

/// Parses and fully validates a domain document. Every failure is an
/// Error(kSchemaError) whose detail starts with a JSON path, e.g.
/// "$.schemas[3].id: duplicate schema id 'wait'".
Domain load_domain(std::string_view json, const LoadOptions& options = {});

/// Semantic checks on an in-memory domain (the same ones load_domain runs).
void validate_domain(const Domain& domain);

/// Canonical document: fixed key order, two-space indent, trailing newline.
std::string serialize_domain(const Domain& domain);

/// Reads a file into memory. Throws std::ios_base::failure if unreadable.
std::string read_file(const std::string& path);

}  // namespace pwim
