#include "pwim/fact.h"

#include <algorithm>

#include "pwim/error.h"

namespace pwim {
namespace {

bool is_lower_key_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_ident_char(char c) {
  return is_lower_key_char(c) || (c >= 'A' && c <= 'Z');
}

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kMalformedFact, "'" + std::string(text) + "': " + std::string(why));
}

// Splits on '.' and '!' into (separator, token) pairs. Token validity is
// checked by the caller.
std::vector<std::pair<Separator, std::string_view>> split_segments(std::string_view text) {
  std::vector<std::pair<Separator, std::string_view>> out;
  if (text.empty()) malformed(text, "empty");
  if (text.front() == '.' || text.front() == '!') malformed(text, "leading separator");
  Separator sep = Separator::kChild;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '.' || text[i] == '!') {
      if (i == start) malformed(text, "empty segment");
      out.emplace_back(sep, text.substr(start, i - start));
      if (i < text.size()) sep = static_cast<Separator>(text[i]);
      start = i + 1;
    }
  }
  return out;
}

void append_rendered(std::string& out, Separator sep, const std::string& token, bool first) {
  if (!first) out.push_back(static_cast<char>(sep));
  out += token;
}

}  // namespace

bool is_key_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_lower_key_char);
}

bool is_variable_token(std::string_view s) {
  return !s.empty() && s.front() >= 'A' && s.front() <= 'Z' &&
         std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string Fact::str() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    append_rendered(out, segments[i].sep, segments[i].key, i == 0);
  }
  return out;
}

Fact parse_fact(std::string_view text) {
  const std::string_view body = trim(text);
  Fact fact;
  for (const auto& [sep, token] : split_segments(body)) {
    if (is_variable_token(token)) malformed(body, "variable '" + std::string(token) + "' in ground fact");
    if (!is_key_token(token)) malformed(body, "illegal token '" + std::string(token) + "'");
    fact.segments.push_back({sep, std::string(token)});
  }
  return fact;
}

std::string Pattern::str() const {
  std::string out = negated ? "not " : "";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    append_rendered(out, segments[i].sep, segments[i].term.text, i == 0);
  }
  return out;
}

bool Pattern::is_ground() const {
  return std::none_of(segments.begin(), segments.end(),
                      [](const PatternSegment& s) { return s.term.variable; });
}

std::vector<std::string> Pattern::variables() const {
  std::vector<std::string> out;
  for (const auto& s : segments) {
    if (s.term.variable && std::find(out.begin(), out.end(), s.term.text) == out.end()) {
      out.push_back(s.term.text);
    }
  }
  return out;
}

void Pattern::collect_variables(std::set<std::string>& out) const {
  for (const auto& s : segments) {
    if (s.term.variable) out.insert(s.term.text);
  }
}

Pattern parse_pattern(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
  Pattern pattern;
  if (body.starts_with("not ") || body.starts_with("not\t")) {
    pattern.negated = true;
    body = body.substr(4);
  }
  body = trim(body);
  for (const auto& [sep, token] : split_segments(body)) {
    if (is_variable_token(token)) {
      pattern.segments.push_back({sep, {std::string(token), true}});
    } else if (is_key_token(token)) {
      pattern.segments.push_back({sep, {std::string(token), false}});
    } else {
      malformed(body, "illegal token '" + std::string(token) + "'");
    }
  }
  return pattern;
}

Pattern to_pattern(const Fact& fact) {
  Pattern p;
  p.segments.reserve(fact.segments.size());
  for (const auto& s : fact.segments) p.segments.push_back({s.sep, {s.key, false}});
  return p;
}

}  // namespace pwim
