#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"

using llx::Firing;
using llx::Multiset;
using llx::ProofStyle;
using llx::ProofTree;
using llx::StepKind;

namespace {

llx::Problem sample() { return llx::testing::load_fixture("sample.llx"); }

llx::Trace f1_trace(const llx::Problem& p) {
  return {{{"pi1", 0}, {"pi2", 0}, {"pi3", 0}}, p.init, p.goal};
}
llx::Trace f2_trace(const llx::Problem& p) {
  return {{{"pi1", 0}, {"pi2", 1}, {"pi4", 0}}, p.init, p.goal};
}

void postorder_labels(const ProofTree& t, std::vector<std::string>& out) {
  for (const auto& p : t.premises) postorder_labels(p, out);
  out.push_back(llx::label(t.step));
}

std::vector<std::string> sorted_labels(const ProofTree& t) {
  std::vector<std::string> out;
  postorder_labels(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(TraceToProof, F1PathHasTheExpectedLabelsInPostorder) {
  llx::Problem p = sample();
  ProofTree t = llx::trace_to_proof(p, f1_trace(p));
  std::vector<std::string> labels;
  postorder_labels(t, labels);
  EXPECT_EQ(labels, (std::vector<std::string>{"id", "id", "id", "*r", "id", "id", "-o l(pi3)",
                                              "&l(f2)", "-o l(pi2)", "-o l(pi1)"}));
  EXPECT_EQ(t.conclusion.left, p.init);
  EXPECT_EQ(t.conclusion.right, p.goal);
}

TEST(TraceToProof, F2PathSwapsTheWithChoiceAndHandler) {
  llx::Problem p = sample();
  std::vector<std::string> labels = sorted_labels(llx::trace_to_proof(p, f2_trace(p)));
  EXPECT_EQ(std::count(labels.begin(), labels.end(), "&l(f1)"), 1);
  EXPECT_EQ(std::count(labels.begin(), labels.end(), "-o l(pi4)"), 1);
  EXPECT_EQ(std::count(labels.begin(), labels.end(), "-o l(pi3)"), 0);
}

TEST(TraceToProof, RejectsTracesThatMissTheGoal) {
  llx::Problem p = sample();
  EXPECT_THROW(llx::trace_to_proof(p, {{{"pi1", 0}}, p.init, {}}), llx::TraceDoesNotReachGoal);
  EXPECT_THROW(llx::trace_to_proof(p, {{{"pi3", 0}}, p.init, {}}), llx::TraceDoesNotReachGoal);
}

TEST(TraceToProof, MultiAtomAlternativesAndTensorIntroductions) {
  llx::Problem p = llx::parse_problem(
      "init a a b\nrule r : a * b -o c * d & e\nrule s : c * d * a -o g\nrule u : e * a -o g\ngoal g\n");
  llx::Verdict v = llx::prove_all_paths(p);
  ASSERT_TRUE(v.proven());
  for (const auto& trace : v.traces) {
    ProofTree t = llx::trace_to_proof(p, trace);
    EXPECT_TRUE(llx::check_proof(p, t).valid) << llx::render_proof(t, ProofStyle::full);
    EXPECT_EQ(llx::proof_firings(t), trace.firings);
  }
}

TEST(CheckProof, AcceptsBothSampleProofs) {
  llx::Problem p = sample();
  EXPECT_TRUE(llx::check_proof(p, llx::trace_to_proof(p, f1_trace(p))).valid);
  EXPECT_TRUE(llx::check_proof(p, llx::trace_to_proof(p, f2_trace(p))).valid);
}

TEST(CheckProof, SwappedWithLabelIsInvalid) {
  llx::Problem p = sample();
  ProofTree t = llx::trace_to_proof(p, f1_trace(p));
  ProofTree& with = t.premises[1].premises[1];
  ASSERT_EQ(with.step.kind, StepKind::with_l);
  with.step.dropped = {Multiset{"f1"}};
  llx::CheckResult r = llx::check_proof(p, t);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.schema, "&l");
  EXPECT_EQ(r.path, (std::vector<std::size_t>{1, 1}));
}

TEST(CheckProof, EmptyTensorSplitIsInvalid) {
  llx::Problem p = sample();
  ProofTree t = llx::trace_to_proof(p, f1_trace(p));
  ProofTree& tensor = t.premises[1].premises[0];
  ASSERT_EQ(tensor.step.kind, StepKind::tensor_r);
  tensor.premises[0].conclusion = {Multiset{"t", "m"}, std::nullopt, Multiset{"t", "m"}};
  tensor.premises[1].conclusion = {Multiset{}, std::nullopt, Multiset{}};
  llx::CheckResult r = llx::check_proof(p, t);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.schema, "*r");
}

TEST(CheckProof, RootMustConcludeInitProvesGoal) {
  llx::Problem p = sample();
  ProofTree t = llx::trace_to_proof(p, f1_trace(p));
  llx::Problem other = p;
  other.init = Multiset{"e", "m", "m"};
  EXPECT_FALSE(llx::check_proof(other, t).valid);
}

TEST(CheckProof, UnknownRuleAndWrongArityAreInvalid) {
  llx::Problem p = sample();
  ProofTree t = llx::trace_to_proof(p, f1_trace(p));
  ProofTree bad = t;
  bad.step.rule = "pi9";
  EXPECT_FALSE(llx::check_proof(p, bad).valid);
  bad = t;
  bad.premises.pop_back();
  EXPECT_FALSE(llx::check_proof(p, bad).valid);
}

TEST(CheckProof, AxiomIsSingleAtom) {
  llx::Problem p = llx::parse_problem("init a b\ngoal a b\n");
  ProofTree t{{Multiset{"a", "b"}, std::nullopt, Multiset{"a", "b"}},
              llx::InferenceStep::of(StepKind::id),
              {}};
  EXPECT_FALSE(llx::check_proof(p, t).valid);
  llx::Verdict v = llx::prove_exists(p);
  ASSERT_TRUE(v.proven());
  EXPECT_TRUE(llx::check_proof(p, llx::trace_to_proof(p, v.traces[0])).valid);
}

TEST(RenderProof, TransitionBlockOfTheF1Path) {
  llx::Problem p = sample();
  std::string text = llx::render_proof(llx::trace_to_proof(p, f1_trace(p)), ProofStyle::transition,
                                       llx::atom_order(p));
  EXPECT_EQ(text, "e, m\n  --pi1-->\nt, m\n  --pi2 [&l f2]-->\nf1\n  --pi3-->\ne\n");
  EXPECT_EQ(text, llx::testing::read_fixture("sample_f1.transition.txt"));
}

TEST(RenderProof, IdOnlyProofIsOneLine) {
  llx::Problem p = llx::parse_problem("init e\ngoal e\n");
  ProofTree t = llx::trace_to_proof(p, {{}, p.init, p.goal});
  EXPECT_EQ(llx::render_proof(t, ProofStyle::transition), "e\n");
  EXPECT_EQ(llx::render_proof(t, ProofStyle::full), "e |- e  [id]\n");
}

TEST(RenderProof, SimplifiedF2ChainHidesTensorsAndAntecedents) {
  llx::Problem p = sample();
  std::string text = llx::render_proof(llx::trace_to_proof(p, f2_trace(p)), ProofStyle::simplified,
                                       llx::atom_order(p));
  EXPECT_EQ(text,
            "e, m |- e\n"
            "  -o l(pi1)\n"
            "t, m |- e\n"
            "  -o l(pi2)\n"
            "f1 & f2 |- e\n"
            "  &l(f1)\n"
            "f2 |- e\n"
            "  -o l(pi4)\n"
            "e |- e\n");
}

TEST(RenderProof, FullTreeIndentsPremises) {
  llx::Problem p = sample();
  std::string text =
      llx::render_proof(llx::trace_to_proof(p, f1_trace(p)), ProofStyle::full, llx::atom_order(p));
  EXPECT_EQ(text,
            "e, m |- e  [-o l(pi1)]\n"
            "  e |- e  [id]\n"
            "  t, m |- e  [-o l(pi2)]\n"
            "    t, m |- t * m  [*r]\n"
            "      t |- t  [id]\n"
            "      m |- m  [id]\n"
            "    f1 & f2 |- e  [&l(f2)]\n"
            "      f1 |- e  [-o l(pi3)]\n"
            "        f1 |- f1  [id]\n"
            "        e |- e  [id]\n");
}

TEST(RenderProof, EqualTreesRenderEqually) {
  llx::Problem p = sample();
  for (ProofStyle s : {ProofStyle::full, ProofStyle::simplified, ProofStyle::transition})
    EXPECT_EQ(llx::render_proof(llx::trace_to_proof(p, f1_trace(p)), s),
              llx::render_proof(llx::trace_to_proof(p, f1_trace(p)), s));
}

TEST(ProofFirings, ReadsTheSpineBack) {
  llx::Problem p = sample();
  EXPECT_EQ(llx::proof_firings(llx::trace_to_proof(p, f2_trace(p))), f2_trace(p).firings);
}
