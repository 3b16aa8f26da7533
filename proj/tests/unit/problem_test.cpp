#include <gtest/gtest.h>

#include "llx/formula.hpp"
#include "llx/problem.hpp"
#include "llx/rule.hpp"

using llx::Formula;
using llx::FragmentError;
using llx::Multiset;
using llx::normalize_rule;
using llx::parse_formula;
using llx::Rule;

namespace {
std::string fragment_reason(const std::string& text) {
  try {
    normalize_rule("bad", parse_formula(text));
  } catch (const FragmentError& e) {
    return e.reason();
  }
  return "accepted";
}
}  // namespace

TEST(NormalizeRule, SplitsPremisesAndAlternativesInSourceOrder) {
  Rule r = normalize_rule("pi2", parse_formula("!(t * m -o f1 & f2)"));
  EXPECT_EQ(r.name, "pi2");
  EXPECT_EQ(r.premises, (Multiset{"t", "m"}));
  ASSERT_EQ(r.alternatives.size(), 2u);
  EXPECT_EQ(r.alternatives[0], Multiset{"f1"});
  EXPECT_EQ(r.alternatives[1], Multiset{"f2"});
  EXPECT_FALSE(r.bang_implied);
}

TEST(NormalizeRule, SingleAlternative) {
  Rule r = normalize_rule("pi1", parse_formula("!(e -o t)"));
  EXPECT_EQ(r.premises, Multiset{"e"});
  EXPECT_EQ(r.alternatives, std::vector<Multiset>{Multiset{"t"}});
}

TEST(NormalizeRule, MissingBangIsImpliedAndFlagged) {
  Rule r = normalize_rule("pi1", parse_formula("e -o t"));
  EXPECT_TRUE(r.bang_implied);
  EXPECT_EQ(r, normalize_rule("pi1", parse_formula("!(e -o t)")));
}

TEST(NormalizeRule, MultiAtomAlternativesAndRepeatedPremises) {
  Rule r = normalize_rule("r", parse_formula("a * a * b -o c * d & e"));
  EXPECT_EQ(r.premises, (Multiset{"a", "a", "b"}));
  EXPECT_EQ(r.alternatives[0], (Multiset{"c", "d"}));
  EXPECT_EQ(r.alternatives[1], Multiset{"e"});
}

TEST(NormalizeRule, RejectsFormulasOutsideTheFragment) {
  EXPECT_EQ(fragment_reason("e -o (t -o m)"), "nested implication");
  EXPECT_EQ(fragment_reason("(e -o t) -o m"), "nested implication");
  EXPECT_EQ(fragment_reason("!e"), "bang on atom");
  EXPECT_EQ(fragment_reason("!(a * b)"), "bang on non-implication");
  EXPECT_EQ(fragment_reason("!e -o t"), "bang inside rule");
  EXPECT_EQ(fragment_reason("e -o !t"), "bang inside rule");
  EXPECT_EQ(fragment_reason("!!(e -o t)"), "bang inside rule");
  EXPECT_EQ(fragment_reason("e"), "rule is not an implication");
  EXPECT_EQ(fragment_reason("a & b -o c"), "with on left of implication");
  EXPECT_EQ(fragment_reason("a -o (b & c) * d"), "with in alternative");
  EXPECT_EQ(fragment_reason("a * (b & c) -o d"), "with in premises");
}

TEST(NormalizeRule, FragmentErrorNamesTheOffendingSubformula) {
  try {
    normalize_rule("bad", parse_formula("e -o (t -o m)"));
    FAIL();
  } catch (const FragmentError& e) {
    EXPECT_EQ(e.offending(), "t -o m");
  }
}

TEST(NormalizeRule, InvertsRuleToFormula) {
  Rule r{"pi2", Multiset{"t", "m"}, {Multiset{"f1"}, Multiset{"f2", "m"}}, false};
  EXPECT_EQ(llx::print_formula(llx::rule_to_formula(r)), "!(m * t -o f1 & f2 * m)");
  EXPECT_EQ(normalize_rule("pi2", llx::rule_to_formula(r)), r);
}

TEST(ValidateProblem, DeclaresImplicitAtomsAsControl) {
  llx::Problem p;
  p.atoms = {{"m", llx::AtomKind::resource}};
  p.rules = {Rule{"r", Multiset{"t", "m"}, {Multiset{"f"}}, false}};
  p.init = Multiset{"t", "m"};
  p.goal = Multiset{"f"};
  llx::validate_problem(p);
  ASSERT_EQ(p.atoms.size(), 3u);
  EXPECT_EQ(p.atoms[1].name, "t");
  EXPECT_EQ(p.atoms[1].kind, llx::AtomKind::control);
  EXPECT_EQ(p.atoms[2].name, "f");
  EXPECT_EQ(p.kind_of("m"), llx::AtomKind::resource);
}

TEST(ValidateProblem, RejectsBrokenInvariants) {
  auto base = [] {
    llx::Problem p;
    p.rules = {Rule{"r", Multiset{"a"}, {Multiset{"b"}}, false}};
    p.goal = Multiset{"b"};
    return p;
  };
  llx::Problem p = base();
  p.rules.push_back(p.rules[0]);
  EXPECT_THROW(llx::validate_problem(p), llx::ValidationError);

  p = base();
  p.goal = {};
  EXPECT_THROW(llx::validate_problem(p), llx::ValidationError);
  EXPECT_NO_THROW(llx::validate_problem(p, {.require_goal = false}));

  p = base();
  p.atoms = {{"a", llx::AtomKind::control}, {"a", llx::AtomKind::resource}};
  EXPECT_THROW(llx::validate_problem(p), llx::ValidationError);

  p = base();
  p.rules[0].premises = {};
  EXPECT_THROW(llx::validate_problem(p), llx::ValidationError);

  p = base();
  p.rules[0].alternatives = {Multiset{}};
  EXPECT_THROW(llx::validate_problem(p), llx::ValidationError);

  p = base();
  p.rules[0].name = "9r";
  EXPECT_THROW(llx::validate_problem(p), llx::ValidationError);

  p = base();
  p.init = Multiset{"bad-name"};
  EXPECT_THROW(llx::validate_problem(p), llx::ValidationError);
}

TEST(Problem, FilterKindKeepsOnlyThatKind) {
  llx::Problem p;
  p.atoms = {{"t", llx::AtomKind::control}, {"m", llx::AtomKind::resource}};
  EXPECT_EQ(llx::filter_kind(p, Multiset{"t", "m", "m"}, llx::AtomKind::resource),
            (Multiset{"m", "m"}));
}
