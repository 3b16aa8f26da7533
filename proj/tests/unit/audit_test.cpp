#include <gtest/gtest.h>

#include "generators.hpp"

using llx::Multiset;
using llx::ViolationKind;

namespace {
llx::Problem sample() { return llx::testing::load_fixture("sample.llx"); }
}  // namespace

TEST(ConsumedResources, OnlyResourceAtomsOfFiredPremises) {
  llx::Problem p = sample();
  EXPECT_EQ(llx::consumed_resources(p, {{{"pi1", 0}, {"pi2", 0}, {"pi3", 0}}, p.init, p.goal}),
            Multiset{"m"});
  EXPECT_EQ(llx::consumed_resources(p, {{}, p.init, p.init}), Multiset{});
  EXPECT_EQ(llx::consumed_resources(p, {{{"pi1", 0}}, p.init, {}}), Multiset{});
}

TEST(Audit, AllowedModelUsePasses) {
  llx::Problem p = sample();
  llx::Policy pol = llx::parse_policy(llx::testing::read_fixture("allow_m.json"));
  EXPECT_EQ(pol.phase, "training");
  llx::AuditReport r = llx::audit(p, llx::prove_all_paths(p), pol);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.findings.empty());
}

TEST(Audit, ForbiddenValidationSliceIsReportedPerFiring) {
  llx::Problem p = llx::testing::load_fixture("leak.llx");
  llx::Policy pol = llx::parse_policy(llx::testing::read_fixture("forbid_val.json"));
  llx::AuditReport r = llx::audit(p, llx::prove_all_paths(p), pol);
  EXPECT_FALSE(r.pass);
  std::vector<llx::Finding> expected{{0, 4, "pi5", "val_slice", ViolationKind::forbidden},
                                     {1, 4, "pi5", "val_slice", ViolationKind::forbidden}};
  EXPECT_EQ(r.findings, expected);
}

TEST(Audit, AllowedIsClosedWorldWhenPresent) {
  llx::Problem p = llx::testing::load_fixture("leak.llx");
  llx::AuditReport r = llx::audit(p, llx::prove_exists(p),
                                  llx::parse_policy(R"({"allowed": ["m"]})"));
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].kind, ViolationKind::not_allowed);
  EXPECT_TRUE(llx::audit(p, llx::prove_exists(p), llx::parse_policy(R"({"phase": "x"})")).pass);
}

TEST(Audit, RequiredResourceMustBeConsumed) {
  llx::Problem p = llx::parse_problem(
      "atoms resource m\ninit e m\nrule a : e -o e2\nrule b : e2 * m -o e\ngoal e2 m\n");
  llx::AuditReport r =
      llx::audit(p, llx::prove_exists(p), llx::parse_policy(R"({"require_consumed": ["m"]})"));
  ASSERT_EQ(r.findings.size(), 1u);
  EXPECT_EQ(r.findings[0].kind, ViolationKind::not_consumed);
  EXPECT_FALSE(r.findings[0].firing_index.has_value());
}

TEST(Policy, MalformedPoliciesAreRejected) {
  EXPECT_THROW(llx::parse_policy("{"), llx::PolicyError);
  EXPECT_THROW(llx::parse_policy("[]"), llx::PolicyError);
  EXPECT_THROW(llx::parse_policy(R"({"allowed": "m"})"), llx::PolicyError);
  EXPECT_THROW(llx::parse_policy(R"({"allowed": [3]})"), llx::PolicyError);
  EXPECT_THROW(llx::parse_policy(R"({"phase": 1})"), llx::PolicyError);
  EXPECT_THROW(llx::parse_policy(R"({"allow": ["m"]})"), llx::PolicyError);
}

TEST(Policy, MustNameDeclaredResourceAtomsOnly) {
  llx::Problem p = sample();
  llx::Verdict v = llx::prove_all_paths(p);
  EXPECT_THROW(llx::audit(p, v, llx::parse_policy(R"({"forbidden": ["nope"]})")), llx::PolicyError);
  EXPECT_THROW(llx::audit(p, v, llx::parse_policy(R"({"forbidden": ["t"]})")), llx::PolicyError);
  EXPECT_THROW(llx::audit(p, v, llx::parse_policy(R"({"allowed": ["m"], "forbidden": ["m"]})")),
               llx::PolicyError);
}

TEST(Audit, NeedsAProvenVerdict) {
  llx::Problem p = llx::testing::load_fixture("sample_no_pi4.llx");
  EXPECT_THROW(llx::audit(p, llx::prove_all_paths(p), llx::Policy{}), llx::PolicyError);
}
