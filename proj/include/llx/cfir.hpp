#pragma once

// Control-flow intermediate representation, schema `llx-cfir/1`:
//
//   { "schema_version": "llx-cfir/1",
//     "name":   "sample",                             optional
//     "atoms":  [{"name": "e", "kind": "control"}, ...],
//     "init":   ["e", "m"],
//     "rules":  [{"name": "pi2", "premises": ["m", "t"],
//                 "alternatives": [["f1"], ["f2"]]}, ...],
//     "goal":   ["e"],
//     "phases": {"training": {"entry_atom": "t"}} }   optional

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "llx/error.hpp"
#include "llx/json_util.hpp"
#include "llx/problem.hpp"

namespace llx {

inline constexpr std::string_view kCfirSchema = "llx-cfir/1";

struct Phase {
  std::string entry_atom;

  friend bool operator==(const Phase&, const Phase&) = default;
};

struct CfirDocument {
  Problem problem;
  std::map<std::string, Phase> phases;

  friend bool operator==(const CfirDocument&, const CfirDocument&) = default;
};

namespace detail {

inline Multiset nonempty_multiset(const Json& v, const std::string& path) {
  Multiset m = multiset_from(v, path);
  if (m.empty()) throw SchemaError(path, "empty multiset is outside the fragment");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_identifier(v[i].get<std::string>()))
      throw SchemaError(index_path(path, i), "invalid atom name");
  return m;
}

inline void check_keys(const Json& obj, const std::string& path,
                       std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError(child_path(path, key.c_str()), "unknown field");
  }
}

}  // namespace detail

inline std::string cfir_to_json(const CfirDocument& doc) {
  using detail::Json;
  const Problem& p = doc.problem;
  Json j;
  j["schema_version"] = kCfirSchema;
  if (p.name) j["name"] = *p.name;
  Json atoms = Json::array();
  for (const auto& a : p.atoms) atoms.push_back(Json{{"name", a.name}, {"kind", to_string(a.kind)}});
  j["atoms"] = std::move(atoms);
  j["init"] = detail::multiset_to_json(p.init);
  Json rules = Json::array();
  for (const auto& r : p.rules) {
    Json alts = Json::array();
    for (const auto& a : r.alternatives) alts.push_back(detail::multiset_to_json(a));
    rules.push_back(Json{{"name", r.name},
                         {"premises", detail::multiset_to_json(r.premises)},
                         {"alternatives", std::move(alts)}});
  }
  j["rules"] = std::move(rules);
  j["goal"] = detail::multiset_to_json(p.goal);
  if (!doc.phases.empty()) {
    Json phases = Json::object();
    for (const auto& [name, ph] : doc.phases) phases[name] = Json{{"entry_atom", ph.entry_atom}};
    j["phases"] = std::move(phases);
  }
  return j.dump(2) + "\n";
}

inline std::string problem_to_cfir(const Problem& p) { return cfir_to_json(CfirDocument{p, {}}); }

inline CfirDocument parse_cfir(std::string_view text) {
  using detail::child_path;
  using detail::field;
  using detail::index_path;
  using detail::Json;

  Json j = detail::parse_json(text);
  if (!j.is_object()) throw SchemaError("", "expected an object");
  detail::check_keys(j, "", {"schema_version", "name", "atoms", "init", "rules", "goal", "phases"});
  std::string version = detail::string_field(j, "schema_version", "");
  if (version != kCfirSchema)
    throw SchemaError("schema_version", "unsupported version '" + version + "'");

  CfirDocument doc;
  Problem& p = doc.problem;
  if (j.contains("name")) p.name = detail::string_field(j, "name", "");

  const Json& atoms = field(j, "atoms", "");
  if (!atoms.is_array()) throw SchemaError("atoms", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::string path = index_path("atoms", i);
    detail::check_keys(atoms[i], path, {"name", "kind"});
    Atom a;
    a.name = detail::string_field(atoms[i], "name", path);
    if (!is_identifier(a.name)) throw SchemaError(child_path(path, "name"), "invalid atom name");
    if (!seen.insert(a.name).second)
      throw SchemaError(child_path(path, "name"), "atom '" + a.name + "' declared twice");
    std::string kind = detail::string_field(atoms[i], "kind", path);
    auto k = atom_kind_from_string(kind);
    if (!k) throw SchemaError(child_path(path, "kind"), "unknown atom kind '" + kind + "'");
    a.kind = *k;
    p.atoms.push_back(std::move(a));
  }

  p.init = detail::multiset_from(field(j, "init", ""), "init");

  const Json& rules = field(j, "rules", "");
  if (!rules.is_array()) throw SchemaError("rules", "expected an array");
  std::set<std::string> rule_names;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::string path = index_path("rules", i);
    detail::check_keys(rules[i], path, {"name", "premises", "alternatives"});
    Rule r;
    r.name = detail::string_field(rules[i], "name", path);
    if (!is_identifier(r.name)) throw SchemaError(child_path(path, "name"), "invalid rule name");
    if (!rule_names.insert(r.name).second)
      throw SchemaError(child_path(path, "name"), "duplicate rule name '" + r.name + "'");
    r.premises = detail::nonempty_multiset(field(rules[i], "premises", path),
                                           child_path(path, "premises"));
    std::string apath = child_path(path, "alternatives");
    const Json& alts = field(rules[i], "alternatives", path);
    if (!alts.is_array() || alts.empty())
      throw SchemaError(apath, "expected a nonempty array of alternatives");
    for (std::size_t b = 0; b < alts.size(); ++b)
      r.alternatives.push_back(detail::nonempty_multiset(alts[b], index_path(apath, b)));
    p.rules.push_back(std::move(r));
  }

  p.goal = detail::multiset_from(field(j, "goal", ""), "goal");
  if (p.goal.empty()) throw SchemaError("goal", "goal is empty");

  try {
    validate_problem(p);
  } catch (const ValidationError& e) {
    throw SchemaError("", e.what());
  }

  if (auto it = j.find("phases"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("phases", "expected an object");
    for (const auto& [name, ph] : it->items()) {
      std::string path = child_path("phases", name.c_str());
      detail::check_keys(ph, path, {"entry_atom"});
      std::string entry = detail::string_field(ph, "entry_atom", path);
      if (!p.find_atom(entry))
        throw SchemaError(child_path(path, "entry_atom"), "unknown atom '" + entry + "'");
      doc.phases.emplace(name, Phase{entry});
    }
  }
  return doc;
}

inline Problem cfir_to_problem(std::string_view text) { return parse_cfir(text).problem; }

}  // namespace llx
