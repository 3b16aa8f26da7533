#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "llx/error.hpp"
#include "llx/formula.hpp"
#include "llx/multiset.hpp"
#include "llx/rule.hpp"

namespace llx {

/// Control atoms model execution points, resource atoms model consumable
/// capabilities (API handles, dataset slices).
enum class AtomKind { control, resource };

inline const char* to_string(AtomKind k) {
  return k == AtomKind::control ? "control" : "resource";
}

inline std::optional<AtomKind> atom_kind_from_string(std::string_view s) {
  if (s == "control") return AtomKind::control;
  if (s == "resource") return AtomKind::resource;
  return std::nullopt;
}

struct Atom {
  std::string name;
  AtomKind kind = AtomKind::control;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// The sequent `Π, M ⊢ γ`: program `rules`, initial multiset `init`,
/// goal multiset `goal`.
struct Problem {
  std::optional<std::string> name;
  std::vector<Atom> atoms;
  std::vector<Rule> rules;
  Multiset init;
  Multiset goal;

  const Atom* find_atom(std::string_view n) const {
    for (const auto& a : atoms)
      if (a.name == n) return &a;
    return nullptr;
  }

  const Rule* find_rule(std::string_view n) const {
    for (const auto& r : rules)
      if (r.name == n) return &r;
    return nullptr;
  }

  std::optional<std::size_t> rule_index(std::string_view n) const {
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (rules[i].name == n) return i;
    return std::nullopt;
  }

  AtomKind kind_of(std::string_view n) const {
    const Atom* a = find_atom(n);
    return a ? a->kind : AtomKind::control;
  }

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Restricts a multiset to atoms of the given kind.
inline Multiset filter_kind(const Problem& p, const Multiset& m, AtomKind k) {
  Multiset out;
  for (const auto& [name, c] : m.counts())
    if (p.kind_of(name) == k) out.add(name, c);
  return out;
}

struct ValidationOptions {
  bool require_goal = true;
};

/// Checks naming and uniqueness invariants and declares every referenced but
/// undeclared atom as a control atom. Implicit atoms are appended rule by
/// rule, then init, then goal; within one multiset in name order.
inline void validate_problem(Problem& p, ValidationOptions opts = {}) {
  std::set<std::string, std::less<>> declared;
  for (const auto& a : p.atoms) {
    if (!is_identifier(a.name))
      throw ValidationError("invalid atom name '" + a.name + "'");
    if (!declared.insert(a.name).second)
      throw ValidationError("atom '" + a.name + "' declared twice");
  }

  std::set<std::string, std::less<>> rule_names;
  for (const auto& r : p.rules) {
    if (!is_identifier(r.name))
      throw ValidationError("invalid rule name '" + r.name + "'");
    if (!rule_names.insert(r.name).second)
      throw ValidationError("duplicate rule name '" + r.name + "'");
    if (r.premises.empty())
      throw ValidationError("rule '" + r.name + "' has no premises");
    if (r.alternatives.empty())
      throw ValidationError("rule '" + r.name + "' has no alternatives");
    for (const auto& alt : r.alternatives)
      if (alt.empty())
        throw ValidationError("rule '" + r.name + "' has an empty alternative");
  }

  auto declare = [&](const Multiset& m) {
    for (const auto& [n, _] : m.counts()) {
      if (!is_identifier(n))
        throw ValidationError("invalid atom name '" + n + "'");
      if (declared.insert(n).second)
        p.atoms.push_back(Atom{n, AtomKind::control});
    }
  };
  for (const auto& r : p.rules) {
    declare(r.premises);
    for (const auto& alt : r.alternatives) declare(alt);
  }
  declare(p.init);
  declare(p.goal);

  if (opts.require_goal && p.goal.empty())
    throw ValidationError("goal is empty");
}

}  // namespace llx
