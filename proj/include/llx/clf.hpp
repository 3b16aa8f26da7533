#pragma once

// CLF-style text export:
//
//   e : type.                      one declaration per atom
//   pi2 : t * m -o {f1 & f2}.      one clause per rule
//   % init: e * m                  init and goal as comments
//   % goal: e
//
// Names colliding with reserved words, or rule names colliding with atom
// names, get a `_` suffix and a warning.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "llx/problem.hpp"
#include "llx/proof.hpp"

namespace llx {

namespace detail {

inline bool clf_reserved(const std::string& n) {
  static const std::set<std::string> words{"type", "kind", "Pi", "Sigma", "Type"};
  return words.count(n) > 0;
}

inline std::string clf_tensor(const Multiset& m, const AtomOrder& order,
                              const std::map<std::string, std::string>& names) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& n : m.elements_ordered(order)) {
    if (!out.empty()) out += " * ";
    out += names.at(n);
  }
  return out;
}

}  // namespace detail

inline std::string export_clf(const Problem& p, std::vector<std::string>* warnings = nullptr) {
  auto warn = [&](std::string w) {
    if (warnings) warnings->push_back(std::move(w));
  };
  AtomOrder order = atom_order(p);

  std::set<std::string> taken;
  for (const auto& a : p.atoms) taken.insert(a.name);
  for (const auto& r : p.rules) taken.insert(r.name);
  auto fresh = [&](const std::string& n) {
    std::string out = n + "_";
    while (taken.count(out) || detail::clf_reserved(out)) out += "_";
    taken.insert(out);
    return out;
  };

  std::map<std::string, std::string> atom_names;
  for (const auto& a : p.atoms) {
    std::string n = a.name;
    if (detail::clf_reserved(n)) {
      n = fresh(n);
      warn("atom '" + a.name + "' is a reserved word, exported as '" + n + "'");
    }
    atom_names[a.name] = n;
  }
  std::set<std::string> atom_out;
  for (const auto& [_, n] : atom_names) atom_out.insert(n);

  std::string out;
  if (p.name) out += "% problem " + *p.name + "\n";
  for (const auto& a : p.atoms)
    out += atom_names[a.name] + " : type.  % " + to_string(a.kind) + "\n";

  if (!p.rules.empty()) out += "\n";
  for (const auto& r : p.rules) {
    std::string n = r.name;
    if (detail::clf_reserved(n) || atom_out.count(n)) {
      n = fresh(n);
      warn("rule '" + r.name + "' clashes with a reserved word or atom, exported as '" + n + "'");
    }
    std::string rhs;
    for (std::size_t b = 0; b < r.alternatives.size(); ++b) {
      const Multiset& alt = r.alternatives[b];
      std::string s = detail::clf_tensor(alt, order, atom_names);
      if (r.alternatives.size() > 1 && alt.size() > 1) s = "(" + s + ")";
      if (b) rhs += " & ";
      rhs += s;
    }
    out += n + " : " + detail::clf_tensor(r.premises, order, atom_names) + " -o {" + rhs + "}.\n";
  }

  out += "\n";
  out += "% init: " + detail::clf_tensor(p.init, order, atom_names) + "\n";
  out += "% goal: " + detail::clf_tensor(p.goal, order, atom_names) + "\n";
  return out;
}

}  // namespace llx
