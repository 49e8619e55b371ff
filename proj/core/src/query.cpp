#include "pwim/query.h"

#include <set>

#include "pwim/error.h"

namespace pwim {
namespace {

void check_safety(const std::vector<Pattern>& patterns, const Binding& seed) {
  std::set<std::string> bound;
  for (const auto& [name, value] : seed) bound.insert(name);
  for (const auto& p : patterns) {
    if (!p.negated) p.collect_variables(bound);
  }
  for (const auto& p : patterns) {
    if (!p.negated) continue;
    for (const auto& v : p.variables()) {
      if (!bound.count(v)) {
        throw Error(ErrorCode::kUnsafePattern,
                    "variable " + v + " in '" + p.str() + "' is not bound by a positive pattern");
      }
    }
  }
}

struct Search {
  const Database& db;
  std::vector<const Pattern*> positives;
  std::vector<const Pattern*> negatives;
  std::set<Binding> results;

  void run(std::size_t depth, const Binding& binding) {
    if (depth == positives.size()) {
      for (const Pattern* neg : negatives) {
        if (db.contains(substitute(*neg, binding))) return;
      }
      results.insert(binding);
      return;
    }
    const Pattern& p = *positives[depth];
    for (const Fact& fact : db.facts()) {
      Binding next = binding;
      if (match(p, fact, next)) run(depth + 1, next);
    }
  }
};

}  // namespace

bool match(const Pattern& pattern, const Fact& fact, Binding& binding) {
  if (pattern.size() != fact.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const PatternSegment& ps = pattern.segments[i];
    const Segment& fs = fact.segments[i];
    if (ps.sep != fs.sep) return false;
    if (!ps.term.variable) {
      if (ps.term.text != fs.key) return false;
      continue;
    }
    auto [it, inserted] = binding.try_emplace(ps.term.text, fs.key);
    if (!inserted && it->second != fs.key) return false;
  }
  return true;
}

Fact substitute(const Pattern& pattern, const Binding& binding) {
  Fact fact;
  fact.segments.reserve(pattern.size());
  for (const auto& s : pattern.segments) {
    if (!s.term.variable) {
      fact.segments.push_back({s.sep, s.term.text});
      continue;
    }
    auto it = binding.find(s.term.text);
    if (it == binding.end()) {
      throw Error(ErrorCode::kMissingBinding,
                  "variable " + s.term.text + " unbound in '" + pattern.str() + "'");
    }
    fact.segments.push_back({s.sep, it->second});
  }
  return fact;
}

std::vector<Binding> query(const Database& db, const std::vector<Pattern>& patterns,
                           const Binding& seed) {
  check_safety(patterns, seed);
  Search search{db, {}, {}, {}};
  for (const auto& p : patterns) (p.negated ? search.negatives : search.positives).push_back(&p);
  search.run(0, seed);
  return {search.results.begin(), search.results.end()};
}

bool holds(const Database& db, const std::vector<Pattern>& patterns, const Binding& binding) {
  for (const auto& p : patterns) {
    if (db.contains(substitute(p, binding)) == p.negated) return false;
  }
  return true;
}

}  // namespace pwim
