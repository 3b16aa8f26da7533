#pragma once

#include <string>
#include <vector>

#include "llx/engine.hpp"
#include "llx/error.hpp"
#include "llx/problem.hpp"
#include "llx/proof.hpp"
#include "llx/rule.hpp"

namespace llx {

class TraceDoesNotReachGoal : public Error {
 public:
  using Error::Error;
};

namespace detail {

class ProofBuilder {
 public:
  explicit ProofBuilder(const Problem& p) : p_(p), order_(atom_order(p)) {}

  // `left |- left` for a nonempty multiset: an axiom for a single atom,
  // otherwise a right-nested chain of tensor introductions in declaration order.
  ProofTree atoms_identity(const Multiset& m) const {
    auto names = m.elements_ordered(order_);
    if (names.size() == 1) return ProofTree{Sequent{m, std::nullopt, m}, InferenceStep::of(StepKind::id), {}};
    Multiset head{names.front()};
    Multiset rest = m - head;
    ProofTree t{Sequent{m, std::nullopt, m}, InferenceStep::of(StepKind::tensor_r), {}};
    t.premises.push_back(atoms_identity(head));
    t.premises.push_back(atoms_identity(rest));
    return t;
  }

  ProofTree from(const State& s, const std::vector<Firing>& firings, std::size_t i) const {
    if (i == firings.size()) return atoms_identity(s);

    const Firing& f = firings[i];
    const Rule& r = *p_.find_rule(f.rule);
    State rest = s - r.premises;
    State next = fire(r, f.branch, s);

    ProofTree t{Sequent{s, std::nullopt, p_.goal}, InferenceStep::lolli(r.name), {}};
    t.premises.push_back(atoms_identity(r.premises));

    ProofTree after = from(next, firings, i + 1);
    const Multiset& chosen = r.alternatives[f.branch];
    if (chosen.size() > 1) {
      after = ProofTree{Sequent{rest, multiset_formula(chosen), p_.goal},
                        InferenceStep::of(StepKind::tensor_l),
                        {std::move(after)}};
    }
    if (r.alternatives.size() > 1) {
      InferenceStep step = InferenceStep::of(StepKind::with_l);
      step.kept = f.branch;
      for (std::size_t b = 0; b < r.alternatives.size(); ++b)
        if (b != f.branch) step.dropped.push_back(r.alternatives[b]);
      after = ProofTree{Sequent{rest, consequent_formula(r), p_.goal}, std::move(step),
                        {std::move(after)}};
    }
    t.premises.push_back(std::move(after));
    return t;
  }

 private:
  const Problem& p_;
  AtomOrder order_;
};

}  // namespace detail

/// Builds the sequent derivation of `init |- goal` that follows the trace:
/// one `-o l` per firing, an `&l` when the rule has several alternatives,
/// a `*l` when the chosen alternative has several atoms, and axioms closed
/// by `*r` wherever a multi-atom multiset is proved.
inline ProofTree trace_to_proof(const Problem& p, const Trace& t) {
  State end;
  try {
    end = replay(p, Trace{t.firings, p.init, {}});
  } catch (const ReplayError& e) {
    throw TraceDoesNotReachGoal(std::string("trace does not replay: ") + e.what());
  }
  if (end != p.goal)
    throw TraceDoesNotReachGoal("trace ends in " + end.braced() + ", goal is " +
                                p.goal.braced());
  return detail::ProofBuilder(p).from(p.init, t.firings, 0);
}

/// Reads the firing sequence back off a proof's spine.
inline std::vector<Firing> proof_firings(const ProofTree& proof) {
  std::vector<Firing> out;
  const ProofTree* t = &proof;
  for (;;) {
    if (t->step.kind == StepKind::lolli_l && t->premises.size() == 2) {
      Firing f{t->step.rule, 0};
      const ProofTree* next = &t->premises[1];
      if (next->step.kind == StepKind::with_l && next->premises.size() == 1) {
        f.branch = next->step.kept;
        next = &next->premises[0];
      }
      while (next->step.kind == StepKind::tensor_l && next->premises.size() == 1)
        next = &next->premises[0];
      out.push_back(std::move(f));
      t = next;
    } else {
      return out;
    }
  }
}

}  // namespace llx
