#include "pwim/database.h"

#include <algorithm>

#include "pwim/query.h"

namespace pwim {

std::vector<std::string> Database::rendered() const {
  std::vector<std::string> out;
  out.reserve(facts_.size());
  for (const auto& f : facts_) out.push_back(f.str());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> exclusion_conflict(const Fact& a, const Fact& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t j = 0; j < n; ++j) {
    const Segment& sa = a.segments[j];
    const Segment& sb = b.segments[j];
    if (sa.sep != sb.sep) return std::nullopt;
    if (sa.key != sb.key) {
      if (sa.sep == Separator::kExclusive) return j;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool satisfies_exclusion(const std::set<Fact>& facts) {
  for (auto i = facts.begin(); i != facts.end(); ++i) {
    for (auto j = std::next(i); j != facts.end(); ++j) {
      if (exclusion_conflict(*i, *j)) return false;
    }
  }
  return true;
}

Database insert(Database db, const Fact& fact) {
  std::erase_if(db.facts_, [&](const Fact& held) {
    return exclusion_conflict(held, fact).has_value();
  });
  db.facts_.insert(fact);
  return db;
}

Database retract(Database db, const Pattern& pattern) {
  std::erase_if(db.facts_, [&](const Fact& held) {
    Binding scratch;
    return match(pattern, held, scratch);
  });
  return db;
}

Database make_database(const std::vector<Fact>& facts) {
  Database db;
  for (const auto& f : facts) db = insert(std::move(db), f);
  return db;
}

}  // namespace pwim
