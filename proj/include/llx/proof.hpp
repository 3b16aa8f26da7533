#pragma once

// Sequent-calculus proof trees and their checker.
//
// The checker validates each node against one of the left-introduction
// schemas below plus the identity axiom, and intentionally depends on nothing
// but the term language: it never calls into the search engine.
//
//   id      a |- a
//   *l      M, A1 * ... * Ak |- G      from  M, A1, ..., Ak |- G
//   *r      M1, M2 |- G1 * G2          from  M1 |- G1   and  M2 |- G2
//   -o l    M1, M2 |- G  using P -o B  from  M1 |- P    and  M2, B |- G
//   &l      M, A1 & ... & Am |- G      from  M, Ak |- G
//
// Program rules are permanent and always implicitly available, so they never
// appear in a sequent; `-o l` names the rule it fetches.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "llx/formula.hpp"
#include "llx/multiset.hpp"
#include "llx/problem.hpp"
#include "llx/rule.hpp"

namespace llx {

/// `left, focus |- right`. The right is read as the tensor of its atoms.
struct Sequent {
  Multiset left;
  std::optional<Formula> focus;
  Multiset right;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

enum class StepKind { id, tensor_l, tensor_r, lolli_l, with_l };

struct InferenceStep {
  StepKind kind = StepKind::id;
  /// Rule fetched by `-o l`.
  std::string rule;
  /// `&l`: index of the kept alternative and, in order, the dropped ones.
  /// The printed label names the dropped alternatives.
  std::size_t kept = 0;
  std::vector<Multiset> dropped;

  static InferenceStep of(StepKind k) {
    InferenceStep s;
    s.kind = k;
    return s;
  }
  static InferenceStep lolli(std::string rule) {
    InferenceStep s = of(StepKind::lolli_l);
    s.rule = std::move(rule);
    return s;
  }

  friend bool operator==(const InferenceStep&, const InferenceStep&) = default;
};

struct ProofTree {
  Sequent conclusion;
  InferenceStep step;
  std::vector<ProofTree> premises;

  friend bool operator==(const ProofTree&, const ProofTree&) = default;
};

inline std::size_t premise_arity(StepKind k) {
  switch (k) {
    case StepKind::id: return 0;
    case StepKind::tensor_l:
    case StepKind::with_l: return 1;
    case StepKind::tensor_r:
    case StepKind::lolli_l: return 2;
  }
  return 0;
}

/// Display order for atoms; empty means lexicographic.
using AtomOrder = std::vector<std::string>;

inline AtomOrder atom_order(const Problem& p) {
  AtomOrder out;
  for (const auto& a : p.atoms) out.push_back(a.name);
  return out;
}

inline std::string dropped_text(const std::vector<Multiset>& dropped,
                                const AtomOrder& order = {}) {
  std::string out;
  for (std::size_t i = 0; i < dropped.size(); ++i) {
    if (i) out += ", ";
    out += dropped[i].to_string_ordered(order, " * ");
  }
  return out;
}

inline std::string label(const InferenceStep& s, const AtomOrder& order = {}) {
  switch (s.kind) {
    case StepKind::id: return "id";
    case StepKind::tensor_l: return "*l";
    case StepKind::tensor_r: return "*r";
    case StepKind::lolli_l: return "-o l(" + s.rule + ")";
    case StepKind::with_l: return "&l(" + dropped_text(s.dropped, order) + ")";
  }
  return "?";
}

inline std::string to_string(const Sequent& q, const AtomOrder& order = {}) {
  std::string lhs = q.left.to_string_ordered(order);
  if (q.focus) {
    if (!lhs.empty()) lhs += ", ";
    lhs += print_formula(*q.focus);
  }
  std::string rhs = q.right.to_string_ordered(order, " * ");
  return lhs.empty() ? "|- " + rhs : lhs + " |- " + rhs;
}

struct CheckResult {
  bool valid = true;
  /// Premise indices from the root to the offending node.
  std::vector<std::size_t> path;
  std::string schema;
  std::string message;

  explicit operator bool() const { return valid; }
};

namespace detail {

class ProofChecker {
 public:
  explicit ProofChecker(const Problem& p) : p_(p) {}

  CheckResult check(const ProofTree& root) {
    if (root.conclusion.focus || root.conclusion.left != p_.init ||
        root.conclusion.right != p_.goal)
      return fail("root", "conclusion is not init |- goal");
    return node(root);
  }

 private:
  CheckResult node(const ProofTree& t) {
    const StepKind k = t.step.kind;
    const char* schema = schema_name(k);
    if (t.premises.size() != premise_arity(k))
      return fail(schema, "expected " + std::to_string(premise_arity(k)) + " premises");
    const Sequent& c = t.conclusion;
    if (c.right.empty()) return fail(schema, "empty succedent");

    switch (k) {
      case StepKind::id:
        if (c.focus) return fail(schema, "focus formula in axiom");
        if (c.left.size() != 1 || c.left != c.right)
          return fail(schema, "axiom must be a |- a for one atom a");
        break;

      case StepKind::tensor_r: {
        const Sequent& a = t.premises[0].conclusion;
        const Sequent& b = t.premises[1].conclusion;
        if (c.focus || a.focus || b.focus)
          return fail(schema, "focus formula in tensor introduction");
        if (a.right.empty() || b.right.empty())
          return fail(schema, "empty side in context split");
        if (a.right + b.right != c.right)
          return fail(schema, "succedent split does not add up");
        if (a.left + b.left != c.left)
          return fail(schema, "context split does not add up");
        break;
      }

      case StepKind::tensor_l: {
        const Sequent& a = t.premises[0].conclusion;
        if (!c.focus || c.focus->kind() != Formula::Kind::tensor)
          return fail(schema, "focus is not a tensor");
        Multiset parts;
        for (const auto& f : c.focus->children()) {
          if (!f.is_atom()) return fail(schema, "tensor of non-atoms");
          parts.add(f.name());
        }
        if (a.focus) return fail(schema, "premise keeps a focus formula");
        if (a.left != c.left + parts) return fail(schema, "premise context mismatch");
        if (a.right != c.right) return fail(schema, "succedent changed");
        break;
      }

      case StepKind::with_l: {
        const Sequent& a = t.premises[0].conclusion;
        if (!c.focus || c.focus->kind() != Formula::Kind::with)
          return fail(schema, "focus is not a with");
        const auto& alts = c.focus->children();
        if (t.step.kept >= alts.size()) return fail(schema, "kept index out of range");
        std::vector<Multiset> others;
        for (std::size_t i = 0; i < alts.size(); ++i) {
          auto m = atoms_of(alts[i]);
          if (!m) return fail(schema, "alternative is not a tensor of atoms");
          if (i != t.step.kept) others.push_back(*m);
        }
        if (others != t.step.dropped)
          return fail(schema, "label does not name the dropped alternatives");
        if (a.right != c.right) return fail(schema, "succedent changed");
        if (!introduces(c.left, alts[t.step.kept], a))
          return fail(schema, "premise does not keep the chosen alternative");
        break;
      }

      case StepKind::lolli_l: {
        const Rule* r = p_.find_rule(t.step.rule);
        if (!r) return fail(schema, "rule '" + t.step.rule + "' is not in the program");
        const Sequent& a = t.premises[0].conclusion;
        const Sequent& b = t.premises[1].conclusion;
        if (c.focus) return fail(schema, "conclusion carries a focus formula");
        if (a.focus) return fail(schema, "antecedent premise carries a focus formula");
        if (a.right != r->premises)
          return fail(schema, "left premise does not prove the rule's premises");
        if (b.right != c.right) return fail(schema, "succedent changed");
        Formula consequent = consequent_formula(*r);
        if (!a.left.is_subset_of(c.left))
          return fail(schema, "context split does not add up");
        Multiset rest = c.left - a.left;
        if (!introduces(rest, consequent, b))
          return fail(schema, "right premise does not receive the rule's consequent");
        break;
      }
    }

    for (std::size_t i = 0; i < t.premises.size(); ++i) {
      path_.push_back(i);
      CheckResult sub = node(t.premises[i]);
      if (!sub.valid) return sub;
      path_.pop_back();
    }
    return CheckResult{};
  }

  // Does `premise` have exactly context `ctx` plus formula `f`? A lone atom
  // joins the multiset; anything larger stays in focus.
  static bool introduces(const Multiset& ctx, const Formula& f, const Sequent& premise) {
    if (f.is_atom()) return !premise.focus && premise.left == ctx + Multiset{f.name()};
    return premise.focus && *premise.focus == f && premise.left == ctx;
  }

  static std::optional<Multiset> atoms_of(const Formula& f) {
    if (f.is_atom()) return Multiset{f.name()};
    if (f.kind() != Formula::Kind::tensor) return std::nullopt;
    Multiset m;
    for (const auto& c : f.children()) {
      if (!c.is_atom()) return std::nullopt;
      m.add(c.name());
    }
    return m;
  }

  static const char* schema_name(StepKind k) {
    switch (k) {
      case StepKind::id: return "id";
      case StepKind::tensor_l: return "*l";
      case StepKind::tensor_r: return "*r";
      case StepKind::lolli_l: return "-o l";
      case StepKind::with_l: return "&l";
    }
    return "?";
  }

  CheckResult fail(std::string schema, std::string message) const {
    return CheckResult{false, path_, std::move(schema), std::move(message)};
  }

  const Problem& p_;
  std::vector<std::size_t> path_;
};

}  // namespace detail

/// Valid iff the root concludes `init |- goal` and every node instantiates
/// one of the schemas above. An invalid result names the first offending
/// node (depth-first, premises left to right).
inline CheckResult check_proof(const Problem& p, const ProofTree& proof) {
  return detail::ProofChecker(p).check(proof);
}

enum class ProofStyle { full, simplified, transition };

namespace detail {

inline void render_full(std::ostringstream& out, const ProofTree& t, std::size_t indent,
                        const AtomOrder& order) {
  out << std::string(indent, ' ') << to_string(t.conclusion, order) << "  ["
      << label(t.step, order) << "]\n";
  for (const auto& p : t.premises) render_full(out, p, indent + 2, order);
}

// The spine is the chain of right premises of `-o l` steps: one node per
// state of the run, ending in the proof of the goal.
inline const ProofTree* skip_tensor_l(const ProofTree* t) {
  while (t->step.kind == StepKind::tensor_l && !t->premises.empty()) t = &t->premises[0];
  return t;
}

}  // namespace detail

/// `full`: the whole tree, one sequent per line, premises indented.
/// `simplified`: the spine only, hiding tensor introductions.
/// `transition`: the states of the run joined by labelled arrows, with the
/// constant succedent left out.
/// Multisets are listed in `order` (typically atom_order(problem)).
inline std::string render_proof(const ProofTree& proof, ProofStyle style,
                                const AtomOrder& order = {}) {
  std::ostringstream out;
  switch (style) {
    case ProofStyle::full:
      detail::render_full(out, proof, 0, order);
      break;

    case ProofStyle::simplified: {
      const ProofTree* t = detail::skip_tensor_l(&proof);
      for (;;) {
        out << to_string(t->conclusion, order) << "\n";
        if (t->step.kind == StepKind::lolli_l && t->premises.size() == 2) {
          out << "  " << label(t->step, order) << "\n";
          t = detail::skip_tensor_l(&t->premises[1]);
        } else if (t->step.kind == StepKind::with_l && t->premises.size() == 1) {
          out << "  " << label(t->step, order) << "\n";
          t = detail::skip_tensor_l(&t->premises[0]);
        } else {
          break;
        }
      }
      break;
    }

    case ProofStyle::transition: {
      const ProofTree* t = detail::skip_tensor_l(&proof);
      out << t->conclusion.left.to_string_ordered(order) << "\n";
      while (t->step.kind == StepKind::lolli_l && t->premises.size() == 2) {
        std::string arrow = t->step.rule;
        const ProofTree* next = detail::skip_tensor_l(&t->premises[1]);
        if (next->step.kind == StepKind::with_l && next->premises.size() == 1) {
          arrow += " [&l " + dropped_text(next->step.dropped, order) + "]";
          next = detail::skip_tensor_l(&next->premises[0]);
        }
        out << "  --" << arrow << "-->\n"
            << next->conclusion.left.to_string_ordered(order) << "\n";
        t = next;
      }
      break;
    }
  }
  return out.str();
}

}  // namespace llx
