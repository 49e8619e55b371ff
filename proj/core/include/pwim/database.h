#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pwim/fact.h"

namespace pwim {

/// Immutable-by-convention set of ground facts. All mutating operations are
/// free functions taking the database by value and returning the new one.
class Database {
 public:
  Database() = default;
  explicit Database(std::set<Fact> facts) : facts_(std::move(facts)) {}

  const std::set<Fact>& facts() const { return facts_; }
  bool contains(const Fact& fact) const { return facts_.count(fact) != 0; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }

  /// Rendered facts in byte order of their text form.
  std::vector<std::string> rendered() const;

  bool operator==(const Database&) const = default;

 private:
  friend Database insert(Database db, const Fact& fact);
  friend Database retract(Database db, const Pattern& pattern);

  std::set<Fact> facts_;
};

/// Two facts conflict when they agree on every segment before some index j,
/// both carry an exclusive separator at j, and their keys at j differ.
/// Returns the first such j.
std::optional<std::size_t> exclusion_conflict(const Fact& a, const Fact& b);

/// True iff no pair of facts conflicts.
bool satisfies_exclusion(const std::set<Fact>& facts);

/// Adds `fact`, first dropping every fact that conflicts with it on any of its
/// exclusive slots. Idempotent.
Database insert(Database db, const Fact& fact);

/// Removes every fact the (positive) pattern matches under some binding.
Database retract(Database db, const Pattern& pattern);

/// Builds a database from facts in order, applying insert semantics.
Database make_database(const std::vector<Fact>& facts);

}  // namespace pwim
