#pragma once

// Test-only reference implementations. These deliberately avoid the library's
// matching/substitution code: facts are compared as rendered strings and
// bindings are found by exhaustive enumeration.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pwim/domain.h"
#include "pwim/fact.h"

namespace oracle {

using Assignment = std::map<std::string, std::string>;

inline std::string render(const pwim::Pattern& p, const Assignment& a) {
  std::string out;
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    if (i) out.push_back(static_cast<char>(p.segments[i].sep));
    const auto& t = p.segments[i].term;
    out += t.variable ? a.at(t.text) : t.text;
  }
  return out;
}

inline std::set<std::string> rendered(const std::set<pwim::Fact>& facts) {
  std::set<std::string> out;
  for (const auto& f : facts) out.insert(f.str());
  return out;
}

inline void keys_of(const pwim::Fact& f, std::set<std::string>& out) {
  for (const auto& s : f.segments) out.insert(s.key);
}

inline void constants_of(const pwim::Pattern& p, std::set<std::string>& out) {
  for (const auto& s : p.segments) {
    if (!s.term.variable) out.insert(s.term.text);
  }
}

inline bool satisfied(const std::set<std::string>& db, const std::vector<pwim::Pattern>& patterns,
                      const Assignment& a) {
  for (const auto& p : patterns) {
    if (db.count(render(p, a)) == p.negated) return false;
  }
  return true;
}

// Calls fn for every total assignment of vars, each var drawn from its domain.
template <typename Fn>
void for_each_assignment(const std::vector<std::pair<std::string, std::vector<std::string>>>& vars,
                         Fn&& fn) {
  Assignment a;
  std::vector<std::size_t> idx(vars.size(), 0);
  for (const auto& [v, dom] : vars) {
    if (dom.empty()) return;
  }
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i].first] = vars[i].second[idx[i]];
    fn(a);
    std::size_t i = 0;
    while (i < vars.size() && ++idx[i] == vars[i].second.size()) idx[i++] = 0;
    if (i == vars.size()) return;
  }
}

/// Brute-force query: every variable ranges over all keys in the db and all
/// constants in the patterns.
inline std::vector<Assignment> brute_query(const std::set<pwim::Fact>& facts,
                                           const std::vector<pwim::Pattern>& patterns) {
  std::set<std::string> universe;
  for (const auto& f : facts) keys_of(f, universe);
  std::set<std::string> names;
  for (const auto& p : patterns) {
    constants_of(p, universe);
    p.collect_variables(names);
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> vars;
  for (const auto& n : names) vars.emplace_back(n, std::vector<std::string>(universe.begin(), universe.end()));
  const auto db = rendered(facts);
  std::set<Assignment> out;
  for_each_assignment(vars, [&](const Assignment& a) {
    if (satisfied(db, patterns, a)) out.insert(a);
  });
  return {out.begin(), out.end()};
}

struct Instance {
  std::string schema_id;
  Assignment binding;
  std::string summary;
};

inline std::string fill_template(std::string tpl, const Assignment& a) {
  for (const auto& [k, v] : a) {
    const std::string ph = "{" + k + "}";
    for (std::size_t pos; (pos = tpl.find(ph)) != std::string::npos;) tpl.replace(pos, ph.size(), v);
  }
  return tpl;
}

/// Brute-force grounding: roles range over the cast, every other variable over
/// the token universe (db keys, pattern constants, cast).
inline std::vector<Instance> brute_enumerate(const std::set<pwim::Fact>& facts, const pwim::Domain& domain) {
  std::set<std::string> universe(domain.cast.begin(), domain.cast.end());
  for (const auto& f : facts) keys_of(f, universe);
  for (const auto& s : domain.schemas) {
    for (const auto& p : s.preconditions) constants_of(p, universe);
  }
  const auto db = rendered(facts);
  std::vector<Instance> out;
  for (const auto& s : domain.schemas) {
    std::set<std::string> names(s.roles.begin(), s.roles.end());
    for (const auto& p : s.preconditions) {
      if (!p.negated) p.collect_variables(names);
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> vars;
    for (const auto& n : names) {
      const bool role = std::find(s.roles.begin(), s.roles.end(), n) != s.roles.end();
      vars.emplace_back(n, role ? domain.cast : std::vector<std::string>(universe.begin(), universe.end()));
    }
    std::set<Assignment> found;
    for_each_assignment(vars, [&](const Assignment& a) {
      if (satisfied(db, s.preconditions, a)) found.insert(a);
    });
    for (const auto& a : found) out.push_back({s.id, a, fill_template(s.summary_template, a)});
  }
  return out;
}

/// Exclusion invariant straight from its definition.
inline bool exclusion_holds(const std::set<pwim::Fact>& facts) {
  std::vector<pwim::Fact> v(facts.begin(), facts.end());
  for (std::size_t x = 0; x < v.size(); ++x) {
    for (std::size_t y = x + 1; y < v.size(); ++y) {
      const auto& a = v[x].segments;
      const auto& b = v[y].segments;
      for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) {
        bool same_prefix = true;
        for (std::size_t i = 0; i < j; ++i) same_prefix &= a[i] == b[i];
        if (same_prefix && a[j].sep == pwim::Separator::kExclusive && b[j].sep == pwim::Separator::kExclusive &&
            a[j].key != b[j].key) {
          return false;
        }
      }
    }
  }
  return true;
}

// Generators -----------------------------------------------------------------

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))]; }

  std::string key() { return pick(keys_); }
  pwim::Separator sep() { return coin(0.4) ? pwim::Separator::kExclusive : pwim::Separator::kChild; }

  pwim::Fact fact(int max_len = 3) {
    pwim::Fact f;
    const int n = uniform(1, max_len);
    for (int i = 0; i < n; ++i) f.segments.push_back({i == 0 ? pwim::Separator::kChild : sep(), key()});
    return f;
  }

  // A pattern of the same shape as some plausible fact, with variables drawn
  // from `vars`.
  pwim::Pattern pattern(const std::vector<std::string>& vars, double var_p, int max_len = 3) {
    pwim::Pattern p;
    const int n = uniform(1, max_len);
    for (int i = 0; i < n; ++i) {
      pwim::Term t = (!vars.empty() && coin(var_p)) ? pwim::Term{pick(vars), true} : pwim::Term{key(), false};
      p.segments.push_back({i == 0 ? pwim::Separator::kChild : sep(), t});
    }
    return p;
  }

  // Random domain within the acceptance bounds (<=30 facts, <=8 schemas, <=3
  // variables per schema). Facts are added with insert semantics so the
  // initial state satisfies exclusion.
  pwim::Domain domain(int max_facts = 30, int max_schemas = 8);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> keys_{"a", "b", "c", "d", "e", "f"};
};

}  // namespace oracle

#include "pwim/database.h"

namespace oracle {

inline pwim::Domain Gen::domain(int max_facts, int max_schemas) {
  pwim::Domain d;
  d.name = "gen";
  d.cast = {"a", "b", "player"};
  d.player = "player";
  pwim::Database db;
  const int nf = uniform(0, max_facts);
  for (int i = 0; i < nf; ++i) db = pwim::insert(std::move(db), fact());
  d.initial_facts.assign(db.facts().begin(), db.facts().end());

  static const std::vector<std::string> all_vars{"X", "Y", "Z"};
  const int ns = uniform(0, max_schemas);
  for (int s = 0; s < ns; ++s) {
    pwim::ActionSchema schema;
    schema.id = "s" + std::to_string(s);
    const int nv = uniform(0, 3);
    std::vector<std::string> vars(all_vars.begin(), all_vars.begin() + nv);
    std::set<std::string> bound;
    const int np = uniform(0, 3);
    for (int i = 0; i < np; ++i) {
      auto p = pattern(vars, 0.5);
      p.collect_variables(bound);
      schema.preconditions.push_back(std::move(p));
    }
    // Unbound vars become roles (ranging over cast); some bound ones too.
    for (const auto& v : vars) {
      if (!bound.count(v) || coin(0.2)) schema.roles.push_back(v);
    }
    std::vector<std::string> usable(vars.begin(), vars.end());
    if (coin(0.5)) {
      auto neg = pattern(usable, 0.6);
      neg.negated = true;
      schema.preconditions.push_back(std::move(neg));
    }
    const int ne = uniform(0, 2);
    for (int i = 0; i < ne; ++i) {
      pwim::Effect e;
      e.op = coin(0.6) ? pwim::EffectOp::kInsert : pwim::EffectOp::kRetract;
      e.fact = pattern(usable, 0.5);
      schema.effects.push_back(std::move(e));
    }
    schema.summary_template = "do " + schema.id;
    for (const auto& v : usable) schema.summary_template += " {" + v + "}";
    d.schemas.push_back(std::move(schema));
  }
  return d;
}

}  // namespace oracle
