#pragma once

// Resource-consumption audits over the traces of a proven problem.
//
// Policy file (JSON): { "phase": "training",
//                       "allowed": ["m"],            optional, closed world
//                       "forbidden": ["val_slice"],  optional
//                       "require_consumed": ["m"] }  optional

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "llx/engine.hpp"
#include "llx/error.hpp"
#include "llx/json_util.hpp"
#include "llx/problem.hpp"

namespace llx {

class PolicyError : public Error {
 public:
  using Error::Error;
};

struct Policy {
  std::string phase;
  /// When present, consuming any resource outside this set is a violation.
  std::optional<std::set<std::string>> allowed;
  std::optional<std::set<std::string>> forbidden;
  std::optional<std::set<std::string>> require_consumed;
};

enum class ViolationKind { not_allowed, forbidden, not_consumed };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::not_allowed: return "not_allowed";
    case ViolationKind::forbidden: return "forbidden";
    case ViolationKind::not_consumed: return "not_consumed";
  }
  return "?";
}

struct Finding {
  std::size_t trace_index = 0;
  /// Absent for `not_consumed`, which is a property of the whole trace.
  std::optional<std::size_t> firing_index;
  std::string rule;
  std::string atom;
  ViolationKind kind = ViolationKind::forbidden;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct AuditReport {
  bool pass = true;
  std::vector<Finding> findings;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

inline Policy parse_policy(std::string_view text) {
  detail::Json j;
  try {
    j = detail::parse_json(text);
  } catch (const ParseError& e) {
    throw PolicyError(std::string("policy: ") + e.what());
  }
  if (!j.is_object()) throw PolicyError("policy: expected a JSON object");
  Policy p;
  auto names = [&](const char* key) -> std::optional<std::set<std::string>> {
    auto it = j.find(key);
    if (it == j.end()) return std::nullopt;
    if (!it->is_array()) throw PolicyError(std::string("policy: '") + key + "' must be an array");
    std::set<std::string> out;
    for (const auto& v : *it) {
      if (!v.is_string())
        throw PolicyError(std::string("policy: '") + key + "' must list atom names");
      out.insert(v.get<std::string>());
    }
    return out;
  };
  for (const auto& [key, _] : j.items())
    if (key != "phase" && key != "allowed" && key != "forbidden" && key != "require_consumed")
      throw PolicyError("policy: unknown field '" + key + "'");
  if (auto it = j.find("phase"); it != j.end()) {
    if (!it->is_string()) throw PolicyError("policy: 'phase' must be a string");
    p.phase = it->get<std::string>();
  }
  p.allowed = names("allowed");
  p.forbidden = names("forbidden");
  p.require_consumed = names("require_consumed");
  return p;
}

/// Every named atom must be a declared resource atom, and allowed and
/// forbidden must be disjoint.
inline void validate_policy(const Problem& p, const Policy& pol) {
  auto check = [&](const std::optional<std::set<std::string>>& s, const char* what) {
    if (!s) return;
    for (const auto& n : *s) {
      const Atom* a = p.find_atom(n);
      if (!a) throw PolicyError(std::string(what) + ": unknown atom '" + n + "'");
      if (a->kind != AtomKind::resource)
        throw PolicyError(std::string(what) + ": '" + n + "' is not a resource atom");
    }
  };
  check(pol.allowed, "allowed");
  check(pol.forbidden, "forbidden");
  check(pol.require_consumed, "require_consumed");
  if (pol.allowed && pol.forbidden)
    for (const auto& n : *pol.allowed)
      if (pol.forbidden->count(n))
        throw PolicyError("'" + n + "' is both allowed and forbidden");
}

/// Resource atoms among the premises of every fired rule, summed over the trace.
inline Multiset consumed_resources(const Problem& p, const Trace& t) {
  Multiset out;
  for (const auto& f : t.firings) {
    const Rule* r = p.find_rule(f.rule);
    if (!r) throw Error("unknown rule '" + f.rule + "' in trace");
    out += filter_kind(p, r->premises, AtomKind::resource);
  }
  return out;
}

inline AuditReport audit(const Problem& p, const Verdict& v, const Policy& pol) {
  if (!v.proven()) throw PolicyError("audit needs a proven verdict");
  validate_policy(p, pol);
  AuditReport report;
  for (std::size_t ti = 0; ti < v.traces.size(); ++ti) {
    const Trace& t = v.traces[ti];
    for (std::size_t fi = 0; fi < t.firings.size(); ++fi) {
      const Rule* r = p.find_rule(t.firings[fi].rule);
      if (!r) throw Error("unknown rule '" + t.firings[fi].rule + "' in trace");
      Multiset used = filter_kind(p, r->premises, AtomKind::resource);
      for (const auto& [atom, _] : used.counts()) {
        if (pol.forbidden && pol.forbidden->count(atom))
          report.findings.push_back({ti, fi, r->name, atom, ViolationKind::forbidden});
        else if (pol.allowed && !pol.allowed->count(atom))
          report.findings.push_back({ti, fi, r->name, atom, ViolationKind::not_allowed});
      }
    }
    if (pol.require_consumed) {
      Multiset used = consumed_resources(p, t);
      for (const auto& atom : *pol.require_consumed)
        if (used.count(atom) == 0)
          report.findings.push_back({ti, std::nullopt, "", atom, ViolationKind::not_consumed});
    }
  }
  report.pass = report.findings.empty();
  return report;
}

}  // namespace llx
