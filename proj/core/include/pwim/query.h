#pragma once

#include <map>
#include <string>
#include <vector>

#include "pwim/database.h"
#include "pwim/fact.h"

namespace pwim {

/// Variable name -> ground token. std::map ordering gives the canonical
/// lexicographic order used for query results.
using Binding = std::map<std::string, std::string>;

/// Structural match: same segment count, same separator at every position,
/// literal terms equal, variables consistent with (and recorded into)
/// `binding`. Ignores `pattern.negated`. On failure `binding` may hold
/// partial entries; callers pass a scratch copy.
bool match(const Pattern& pattern, const Fact& fact, Binding& binding);

/// Replaces bound variables. Throws Error(kMissingBinding) if the pattern
/// still has a variable afterwards.
Fact substitute(const Pattern& pattern, const Binding& binding);

/// All bindings (extending `seed`) under which every positive pattern matches
/// some fact and no negative pattern matches any. Sorted, duplicate-free.
/// Throws Error(kUnsafePattern) if a negative pattern uses a variable not
/// bound by a positive pattern or by `seed`.
std::vector<Binding> query(const Database& db, const std::vector<Pattern>& patterns,
                           const Binding& seed = {});

/// True iff the fully bound patterns hold in `db`.
bool holds(const Database& db, const std::vector<Pattern>& patterns, const Binding& binding);

}  // namespace pwim
