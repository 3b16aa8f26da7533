#include <gtest/gtest.h>

#include "generators.hpp"

using llx::SearchMode;
using llx::State;

TEST(Oracle, SampleIsProvenOnAllPathsAtDepthSix) {
  llx::Verdict v = llx::oracle_reachable(llx::testing::load_fixture("sample.llx"), 6,
                                         SearchMode::all_paths);
  EXPECT_TRUE(v.proven());
  EXPECT_EQ(v.traces.size(), 2u);
}

TEST(Oracle, EmptyProgramWithInitGoalAtDepthZero) {
  llx::Verdict v =
      llx::oracle_reachable(llx::parse_problem("init e\ngoal e\n"), 0, SearchMode::exists);
  EXPECT_TRUE(v.proven());
}

TEST(Oracle, ShallowDepthIsInconclusiveNotRefuted) {
  llx::Verdict v = llx::oracle_reachable(llx::testing::load_fixture("sample.llx"), 2,
                                         SearchMode::exists);
  EXPECT_TRUE(v.limit_exceeded());
}

TEST(Oracle, ClosedTreeIsRefuted) {
  llx::Verdict v = llx::oracle_reachable(llx::testing::load_fixture("sample_no_pi4.llx"), 8,
                                         SearchMode::all_paths);
  EXPECT_TRUE(v.refuted());
}

TEST(Oracle, SurplusResourceIsConsumedBySecondRound) {
  // Two rounds of the training loop consume both copies of m.
  llx::Verdict v = llx::oracle_reachable(llx::testing::load_fixture("sample_extra_m.llx"), 8,
                                         SearchMode::exists);
  EXPECT_TRUE(v.proven());
}

TEST(Oracle, WitnessesReplayToTheGoal) {
  llx::Problem p = llx::testing::load_fixture("leak.llx");
  llx::Verdict v = llx::oracle_reachable(p, 8, SearchMode::all_paths);
  ASSERT_TRUE(v.proven());
  for (const auto& t : v.traces) EXPECT_EQ(llx::replay(p, t), p.goal);
}
