#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "llx/error.hpp"
#include "llx/multiset.hpp"
#include "llx/problem.hpp"
#include "llx/rule.hpp"

namespace llx {

struct Place {
  std::string name;
  AtomKind kind = AtomKind::control;

  friend bool operator==(const Place&, const Place&) = default;
};

struct Transition {
  std::string name;
  Multiset inputs;
  Multiset outputs;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Places are atoms, transitions are rule alternatives, the marking is a
/// state. A rule with m alternatives becomes transitions `rule#0 .. rule#m-1`.
struct PetriNet {
  std::vector<Place> places;
  std::vector<Transition> transitions;
  Multiset marking;

  const Transition* find_transition(std::string_view n) const {
    for (const auto& t : transitions)
      if (t.name == n) return &t;
    return nullptr;
  }

  friend bool operator==(const PetriNet&, const PetriNet&) = default;
};

class GroupingError : public Error {
 public:
  using Error::Error;
};

inline PetriNet to_petri(const Problem& p) {
  PetriNet n;
  for (const auto& a : p.atoms) n.places.push_back(Place{a.name, a.kind});
  for (const auto& r : p.rules)
    for (std::size_t b = 0; b < r.alternatives.size(); ++b)
      n.transitions.push_back(
          Transition{r.name + "#" + std::to_string(b), r.premises, r.alternatives[b]});
  n.marking = p.init;
  return n;
}

/// Fires a transition on the net's marking; throws if it is not enabled.
inline Multiset fire_transition(const PetriNet& n, std::string_view name,
                                const Multiset& marking) {
  const Transition* t = n.find_transition(name);
  if (!t) throw Error("unknown transition '" + std::string(name) + "'");
  if (!t->inputs.is_subset_of(marking))
    throw Error("transition '" + std::string(name) + "' not enabled: missing " +
                (t->inputs - marking).braced());
  return (marking - t->inputs) + t->outputs;
}

struct PetriImport {
  Problem problem;
  std::vector<std::string> warnings;
};

namespace detail {

// Splits `base#idx`; names without a well-formed numeric suffix are their own base.
inline std::pair<std::string, std::optional<std::size_t>> split_transition_name(
    std::string_view name) {
  auto hash = name.rfind('#');
  if (hash == std::string_view::npos || hash == 0 || hash + 1 == name.size())
    return {std::string(name), std::nullopt};
  std::size_t idx = 0;
  auto digits = name.substr(hash + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    return {std::string(name), std::nullopt};
  return {std::string(name.substr(0, hash)), idx};
}

}  // namespace detail

/// Regroups `base#i` transitions into one rule with alternatives ordered by
/// index. The goal has no net counterpart and is taken from `goal`; when
/// that is empty the import carries a warning.
inline PetriImport from_petri(const PetriNet& n, const Multiset& goal = {}) {
  PetriImport out;
  Problem& p = out.problem;
  for (const auto& pl : n.places) p.atoms.push_back(Atom{pl.name, pl.kind});

  struct Group {
    Multiset inputs;
    std::map<std::size_t, Multiset> alts;
  };
  std::vector<std::string> order;
  std::map<std::string, Group> groups;
  for (const auto& t : n.transitions) {
    auto [base, idx] = detail::split_transition_name(t.name);
    auto it = groups.find(base);
    if (it == groups.end()) {
      order.push_back(base);
      it = groups.emplace(base, Group{t.inputs, {}}).first;
    } else {
      if (!idx)
        throw GroupingError("transition '" + t.name + "' collides with rule '" + base + "'");
      if (it->second.inputs != t.inputs)
        throw GroupingError("transitions of '" + base + "' disagree on inputs: " +
                            it->second.inputs.braced() + " vs " + t.inputs.braced());
    }
    std::size_t key = idx.value_or(0);
    if (!it->second.alts.emplace(key, t.outputs).second)
      throw GroupingError("duplicate transition index in '" + t.name + "'");
  }

  for (const auto& base : order) {
    const Group& g = groups.at(base);
    Rule r;
    r.name = base;
    r.premises = g.inputs;
    std::size_t expect = 0;
    for (const auto& [idx, outputs] : g.alts) {
      if (idx != expect)
        throw GroupingError("transitions of '" + base + "' skip index " + std::to_string(expect));
      ++expect;
      r.alternatives.push_back(outputs);
    }
    p.rules.push_back(std::move(r));
  }
  p.init = n.marking;
  p.goal = goal;
  if (goal.empty())
    out.warnings.push_back("petri nets carry no goal; the imported problem has an empty goal");
  try {
    validate_problem(p, ValidationOptions{.require_goal = false});
  } catch (const ValidationError& e) {
    throw GroupingError(e.what());
  }
  return out;
}

struct DotOptions {
  std::string control_color = "#fdae61";
  std::string resource_color = "#a6d96a";
  std::string transition_color = "#404040";
};

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// `pi2#1` displays as `pi2b` when the rule has several alternatives and as
// `pi1` when it has only one.
inline std::string transition_display(const PetriNet& n, const Transition& t) {
  auto [base, idx] = split_transition_name(t.name);
  if (!idx) return t.name;
  std::size_t siblings = 0;
  for (const auto& u : n.transitions)
    if (split_transition_name(u.name).first == base) ++siblings;
  if (siblings <= 1) return base;
  if (*idx >= 26) return t.name;
  return base + static_cast<char>('a' + *idx);
}

}  // namespace detail

/// Deterministic Graphviz rendering. Node order follows declaration order;
/// arcs carry a multiplicity label when it exceeds one.
inline std::string export_dot(const PetriNet& n, const DotOptions& opts = {}) {
  std::ostringstream out;
  out << "digraph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (const auto& pl : n.places) {
    std::string label = pl.name;
    if (std::size_t c = n.marking.count(pl.name)) label += " (" + std::to_string(c) + ")";
    out << "  " << detail::dot_quote("p:" + pl.name) << " [shape=circle, style=filled, fillcolor="
        << detail::dot_quote(pl.kind == AtomKind::control ? opts.control_color
                                                          : opts.resource_color)
        << ", label=" << detail::dot_quote(label) << "];\n";
  }
  for (const auto& t : n.transitions) {
    out << "  " << detail::dot_quote("t:" + t.name)
        << " [shape=box, style=filled, fillcolor=" << detail::dot_quote(opts.transition_color)
        << ", fontcolor=\"white\", label=" << detail::dot_quote(detail::transition_display(n, t))
        << "];\n";
  }
  auto arc = [&](const std::string& from, const std::string& to, std::size_t c) {
    out << "  " << detail::dot_quote(from) << " -> " << detail::dot_quote(to);
    if (c > 1) out << " [label=\"" << c << "\"]";
    out << ";\n";
  };
  for (const auto& t : n.transitions) {
    // Arcs in place declaration order, for a stable diff.
    for (const auto& pl : n.places)
      if (std::size_t c = t.inputs.count(pl.name)) arc("p:" + pl.name, "t:" + t.name, c);
    for (const auto& pl : n.places)
      if (std::size_t c = t.outputs.count(pl.name)) arc("t:" + t.name, "p:" + pl.name, c);
  }
  out << "}\n";
  return out.str();
}

}  // namespace llx
