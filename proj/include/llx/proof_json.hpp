#pragma once

// Proof interchange format, schema `llx-proof/1`:
//
//   { "schema_version": "llx-proof/1",
//     "proof": NODE }
//
//   NODE = { "rule_kind": "id" | "tensor_l" | "tensor_r" | "lolli_l" | "with_l",
//            "label":     display label, must match the step,
//            "rule":      rule name            (lolli_l only),
//            "kept":      alternative index    (with_l only),
//            "dropped":   [[atom...]...]       (with_l only),
//            "sequent":   { "left": [atom...], "focus": formula | null,
//                           "right": [atom...] },
//            "premises":  [NODE...] }

#include <string>
#include <string_view>

#include "llx/error.hpp"
#include "llx/formula.hpp"
#include "llx/json_util.hpp"
#include "llx/proof.hpp"

namespace llx {

inline constexpr std::string_view kProofSchema = "llx-proof/1";

namespace detail {

inline const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::id: return "id";
    case StepKind::tensor_l: return "tensor_l";
    case StepKind::tensor_r: return "tensor_r";
    case StepKind::lolli_l: return "lolli_l";
    case StepKind::with_l: return "with_l";
  }
  return "?";
}

inline Json proof_node_to_json(const ProofTree& t) {
  Json j;
  j["rule_kind"] = step_kind_name(t.step.kind);
  j["label"] = label(t.step);
  if (t.step.kind == StepKind::lolli_l) j["rule"] = t.step.rule;
  if (t.step.kind == StepKind::with_l) {
    j["kept"] = t.step.kept;
    Json dropped = Json::array();
    for (const auto& d : t.step.dropped) dropped.push_back(multiset_to_json(d));
    j["dropped"] = std::move(dropped);
  }
  Json seq;
  seq["left"] = multiset_to_json(t.conclusion.left);
  seq["focus"] = t.conclusion.focus ? Json(print_formula(*t.conclusion.focus)) : Json(nullptr);
  seq["right"] = multiset_to_json(t.conclusion.right);
  j["sequent"] = std::move(seq);
  Json prem = Json::array();
  for (const auto& p : t.premises) prem.push_back(proof_node_to_json(p));
  j["premises"] = std::move(prem);
  return j;
}

inline ProofTree proof_node_from_json(const Json& j, const std::string& path) {
  ProofTree t;
  std::string kind = string_field(j, "rule_kind", path);
  if (kind == "id") t.step.kind = StepKind::id;
  else if (kind == "tensor_l") t.step.kind = StepKind::tensor_l;
  else if (kind == "tensor_r") t.step.kind = StepKind::tensor_r;
  else if (kind == "lolli_l") t.step.kind = StepKind::lolli_l;
  else if (kind == "with_l") t.step.kind = StepKind::with_l;
  else throw SchemaError(child_path(path, "rule_kind"), "unknown rule_kind '" + kind + "'");

  if (t.step.kind == StepKind::lolli_l) t.step.rule = string_field(j, "rule", path);
  if (t.step.kind == StepKind::with_l) {
    const Json& kept = field(j, "kept", path);
    if (!kept.is_number_unsigned())
      throw SchemaError(child_path(path, "kept"), "expected a non-negative integer");
    t.step.kept = kept.get<std::size_t>();
    const Json& dropped = field(j, "dropped", path);
    std::string dpath = child_path(path, "dropped");
    if (!dropped.is_array()) throw SchemaError(dpath, "expected an array");
    for (std::size_t i = 0; i < dropped.size(); ++i)
      t.step.dropped.push_back(multiset_from(dropped[i], index_path(dpath, i)));
  }
  if (string_field(j, "label", path) != label(t.step))
    throw SchemaError(child_path(path, "label"), "label does not match the step");

  std::string spath = child_path(path, "sequent");
  const Json& seq = field(j, "sequent", path);
  t.conclusion.left = multiset_from(field(seq, "left", spath), child_path(spath, "left"));
  t.conclusion.right = multiset_from(field(seq, "right", spath), child_path(spath, "right"));
  const Json& focus = field(seq, "focus", spath);
  if (focus.is_string()) {
    try {
      t.conclusion.focus = parse_formula(focus.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(child_path(spath, "focus"), e.what());
    }
  } else if (!focus.is_null()) {
    throw SchemaError(child_path(spath, "focus"), "expected a formula string or null");
  }

  const Json& prem = field(j, "premises", path);
  std::string ppath = child_path(path, "premises");
  if (!prem.is_array()) throw SchemaError(ppath, "expected an array");
  for (std::size_t i = 0; i < prem.size(); ++i)
    t.premises.push_back(proof_node_from_json(prem[i], index_path(ppath, i)));
  return t;
}

}  // namespace detail

inline std::string proof_to_interchange(const ProofTree& proof) {
  detail::Json doc;
  doc["schema_version"] = kProofSchema;
  doc["proof"] = detail::proof_node_to_json(proof);
  return doc.dump(2) + "\n";
}

/// Structural decoding only; run check_proof() on the result to validate it.
inline ProofTree interchange_to_proof(std::string_view text) {
  detail::Json doc = detail::parse_json(text);
  std::string version = detail::string_field(doc, "schema_version", "");
  if (version != kProofSchema)
    throw SchemaError("schema_version", "unsupported version '" + version + "'");
  return detail::proof_node_from_json(detail::field(doc, "proof", ""), "proof");
}

}  // namespace llx
