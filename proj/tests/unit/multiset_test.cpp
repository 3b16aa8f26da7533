#include <gtest/gtest.h>

#include "llx/multiset.hpp"

using llx::Multiset;

TEST(Multiset, CountsAreExactAndOrderIndependent) {
  Multiset a{"m", "e", "m"};
  Multiset b{"e", "m", "m"};
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.count("m"), 2u);
  EXPECT_EQ(a.count("x"), 0u);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_NE(a, (Multiset{"e", "m"}));
}

TEST(Multiset, CanonicalPrintIsLexicographicWithRepetition) {
  EXPECT_EQ((Multiset{"m", "e", "m"}).to_string(), "e, m, m");
  EXPECT_EQ((Multiset{"t", "m"}).braced(), "{m, t}");
  EXPECT_EQ(Multiset{}.to_string(), "");
  EXPECT_EQ(Multiset{}.braced(), "{}");
}

TEST(Multiset, OrderedPrintFollowsGivenOrderThenLexicographic) {
  Multiset m{"m", "t", "z", "a"};
  EXPECT_EQ(m.to_string_ordered({"t", "m"}), "t, m, a, z");
  EXPECT_EQ(m.elements_ordered({"t", "m"}), (std::vector<std::string>{"t", "m", "a", "z"}));
  EXPECT_EQ(m.to_string_ordered({}), m.to_string());
}

TEST(Multiset, RemovingNeverStoresZeroCounts) {
  Multiset m{"e"};
  EXPECT_EQ(m.remove("e", 5), 1u);
  EXPECT_TRUE(m.empty());
  EXPECT_EQ(m.distinct(), 0u);
  EXPECT_EQ(m, Multiset{});
  m.add("e", 0);
  EXPECT_TRUE(m.empty());
}

TEST(Multiset, SubsetIsCountWise) {
  EXPECT_TRUE((Multiset{"t", "m"}).is_subset_of(Multiset{"t", "m", "m"}));
  EXPECT_FALSE((Multiset{"m", "m"}).is_subset_of(Multiset{"t", "m"}));
  EXPECT_TRUE(Multiset{}.is_subset_of(Multiset{}));
}

TEST(Multiset, DifferenceTruncatesAtZero) {
  EXPECT_EQ((Multiset{"t", "m"}) - (Multiset{"m", "m", "x"}), Multiset{"t"});
}

TEST(Multiset, UnionIsCommutativeAndAssociative) {
  Multiset a{"e", "m"}, b{"m", "t"}, c{"f1"};
  EXPECT_EQ(a + b, b + a);
  EXPECT_EQ((a + b) + c, a + (b + c));
}

TEST(Multiset, UnionThenDifferenceIsIdentity) {
  Multiset a{"e", "m"}, b{"m", "t", "t"};
  EXPECT_EQ((a + b) - b, a);
}

TEST(Multiset, TotalOrderIsConsistentWithEquality) {
  Multiset a{"e"}, b{"e", "m"};
  EXPECT_TRUE(a < b || b < a);
  EXPECT_FALSE(a < a);
}
