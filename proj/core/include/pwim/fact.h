#pragma once

// Exclusion-logic facts and patterns.
//
// Text grammar:
//   fact    := key (("." | "!") key)*        key := [a-z0-9_]+
//   pattern := ["not "] term (("." | "!") term)*
//   term    := key | variable                variable := [A-Z][A-Za-z0-9_]*
//
// "." is a child separator (a node may have many children), "!" is an
// exclusive separator (the slot holds at most one value).

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pwim {

enum class Separator : char { kChild = '.', kExclusive = '!' };

struct Segment {
  Separator sep = Separator::kChild;
  std::string key;

  auto operator<=>(const Segment&) const = default;
};

/// A ground statement. The first segment's separator is always kChild.
struct Fact {
  std::vector<Segment> segments;

  std::string str() const;
  std::size_t size() const { return segments.size(); }

  auto operator<=>(const Fact&) const = default;
};

bool is_key_token(std::string_view s);
bool is_variable_token(std::string_view s);

/// Parses a ground fact; surrounding whitespace is trimmed.
/// Throws Error(kMalformedFact).
Fact parse_fact(std::string_view text);

struct Term {
  std::string text;
  bool variable = false;

  auto operator<=>(const Term&) const = default;
};

struct PatternSegment {
  Separator sep = Separator::kChild;
  Term term;

  auto operator<=>(const PatternSegment&) const = default;
};

struct Pattern {
  std::vector<PatternSegment> segments;
  bool negated = false;

  std::string str() const;
  std::size_t size() const { return segments.size(); }
  bool is_ground() const;
  /// Variables in order of first appearance.
  std::vector<std::string> variables() const;
  void collect_variables(std::set<std::string>& out) const;

  auto operator<=>(const Pattern&) const = default;
};

/// Throws Error(kMalformedFact) on grammar violations.
Pattern parse_pattern(std::string_view text);

/// Positive, variable-free pattern with the same segments.
Pattern to_pattern(const Fact& fact);

}  // namespace pwim
