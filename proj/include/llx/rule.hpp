#pragma once

#include <string>
#include <utility>
#include <vector>

#include "llx/error.hpp"
#include "llx/formula.hpp"
#include "llx/multiset.hpp"

namespace llx {

/// A permanent program clause `!(p1 * ... * pk -o A1 & ... & Am)`.
///
/// The order of `alternatives` is significant: it fixes the branch index
/// used by traces and the `#i` suffix of the matching petri-net transitions.
struct Rule {
  std::string name;
  Multiset premises;
  std::vector<Multiset> alternatives;
  /// Set when the source formula omitted the outer `!`; the rule is
  /// promoted to a permanent one regardless.
  bool bang_implied = false;

  // bang_implied is provenance only and does not take part in equality.
  friend bool operator==(const Rule& a, const Rule& b) {
    return a.name == b.name && a.premises == b.premises &&
           a.alternatives == b.alternatives;
  }
};

/// Tensor of the atoms of a nonempty multiset, listed in `order` first and
/// lexicographically otherwise.
inline Formula multiset_formula(const Multiset& m, const std::vector<std::string>& order = {}) {
  std::vector<Formula> atoms;
  for (auto& n : m.elements_ordered(order)) atoms.push_back(Formula::atom(std::move(n)));
  return Formula::tensor(std::move(atoms));
}

/// The consequent `A1 & ... & Am` of a rule (a bare tensor when m == 1).
inline Formula consequent_formula(const Rule& r, const std::vector<std::string>& order = {}) {
  std::vector<Formula> alts;
  for (const auto& a : r.alternatives) alts.push_back(multiset_formula(a, order));
  return Formula::with(std::move(alts));
}

inline Formula rule_to_formula(const Rule& r) {
  return Formula::bang(
      Formula::lolli(multiset_formula(r.premises), consequent_formula(r)));
}

namespace detail {

inline Multiset atoms_of_tensor(const Formula& f, const char* where) {
  if (f.is_atom()) return Multiset{f.name()};
  if (f.kind() == Formula::Kind::tensor) {
    Multiset m;
    for (const auto& c : f.children()) {
      if (!c.is_atom()) break;
      m.add(c.name());
    }
    if (m.size() == f.children().size()) return m;
  }
  std::string reason;
  switch (f.kind()) {
    case Formula::Kind::lolli: reason = "nested implication"; break;
    case Formula::Kind::bang: reason = "bang inside rule"; break;
    case Formula::Kind::with: reason = std::string("with in ") + where; break;
    default: {
      // Tensor containing a non-atom: report the first offending child.
      for (const auto& c : f.children())
        if (!c.is_atom()) return atoms_of_tensor(c, where);
      reason = "unsupported formula";
    }
  }
  throw FragmentError(reason, print_formula(f));
}

}  // namespace detail

/// Brings `!(T -o A)` (or the bang-less `T -o A`) into rule normal form.
/// T must be a tensor of atoms and A a with of tensors of atoms.
inline Rule normalize_rule(std::string name, const Formula& f) {
  const Formula* body = &f;
  bool implied = true;
  if (f.kind() == Formula::Kind::bang) {
    body = &f.inner();
    implied = false;
    if (body->kind() == Formula::Kind::bang)
      throw FragmentError("bang inside rule", print_formula(*body));
    if (body->kind() != Formula::Kind::lolli)
      throw FragmentError(body->is_atom() ? "bang on atom"
                                          : "bang on non-implication",
                          print_formula(f));
  }
  if (body->kind() != Formula::Kind::lolli)
    throw FragmentError("rule is not an implication", print_formula(*body));

  Rule rule;
  rule.name = std::move(name);
  rule.bang_implied = implied;

  const Formula& lhs = body->left();
  if (lhs.kind() == Formula::Kind::with)
    throw FragmentError("with on left of implication", print_formula(lhs));
  rule.premises = detail::atoms_of_tensor(lhs, "premises");

  const Formula& rhs = body->right();
  if (rhs.kind() == Formula::Kind::with) {
    for (const auto& alt : rhs.children())
      rule.alternatives.push_back(detail::atoms_of_tensor(alt, "alternative"));
  } else {
    rule.alternatives.push_back(detail::atoms_of_tensor(rhs, "alternative"));
  }
  return rule;
}

}  // namespace llx
