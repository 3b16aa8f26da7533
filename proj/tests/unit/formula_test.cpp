#include <gtest/gtest.h>

#include "llx/error.hpp"
#include "llx/formula.hpp"

using llx::Formula;
using llx::parse_formula;
using llx::print_formula;

namespace {
Formula A(const char* n) { return Formula::atom(n); }
}  // namespace

TEST(ParseFormula, BangedImplication) {
  EXPECT_EQ(parse_formula("!(e -o t)"), Formula::bang(Formula::lolli(A("e"), A("t"))));
}

TEST(ParseFormula, TensorBindsTighterThanWithTighterThanLolli) {
  EXPECT_EQ(parse_formula("t * m -o f1 & f2"),
            Formula::lolli(Formula::tensor({A("t"), A("m")}), Formula::with({A("f1"), A("f2")})));
}

TEST(ParseFormula, SingleAtom) { EXPECT_EQ(parse_formula("e"), A("e")); }

TEST(ParseFormula, ParenthesisedNestedLolliIsGrammatical) {
  EXPECT_EQ(parse_formula("e -o (t -o m)"), Formula::lolli(A("e"), Formula::lolli(A("t"), A("m"))));
}

TEST(ParseFormula, WhitespaceInsensitive) {
  EXPECT_EQ(parse_formula("  !(t*m-o f1&f2) "), parse_formula("!(t * m -o f1 & f2)"));
  EXPECT_EQ(parse_formula("a\n*\tb"), parse_formula("a * b"));
}

TEST(ParseFormula, StoresTensorAndWithFlattened) {
  Formula f = parse_formula("(a * b) * c");
  ASSERT_EQ(f.kind(), Formula::Kind::tensor);
  EXPECT_EQ(f.children().size(), 3u);
  EXPECT_EQ(parse_formula("a & (b & c)").children().size(), 3u);
  EXPECT_EQ(parse_formula("((e))"), A("e"));
}

TEST(ParseFormula, ChainedLolliIsRejected) {
  try {
    parse_formula("a -o b -o c");
    FAIL() << "expected ParseError";
  } catch (const llx::ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 8u);
  }
}

TEST(ParseFormula, ErrorsCarryPositionAndExpectedTokens) {
  try {
    parse_formula("t *  ", 3, 1);
    FAIL() << "expected ParseError";
  } catch (const llx::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 6u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_formula(""), llx::ParseError);
  EXPECT_THROW(parse_formula("(e"), llx::ParseError);
  EXPECT_THROW(parse_formula("e)"), llx::ParseError);
  EXPECT_THROW(parse_formula("e $ t"), llx::ParseError);
  EXPECT_THROW(parse_formula("e - t"), llx::ParseError);
  EXPECT_THROW(parse_formula("1e"), llx::ParseError);
}

TEST(PrintFormula, CanonicalSpacingAndMinimalParentheses) {
  EXPECT_EQ(print_formula(Formula::bang(Formula::lolli(Formula::tensor({A("t"), A("m")}),
                                                       Formula::with({A("f1"), A("f2")})))),
            "!(t * m -o f1 & f2)");
  EXPECT_EQ(print_formula(A("e")), "e");
  EXPECT_EQ(print_formula(Formula::with({Formula::tensor({A("a"), A("b")}), A("c")})), "a * b & c");
  EXPECT_EQ(print_formula(Formula::tensor({Formula::with({A("a"), A("b")}), A("c")})),
            "(a & b) * c");
  EXPECT_EQ(print_formula(Formula::lolli(A("e"), Formula::lolli(A("t"), A("m")))), "e -o (t -o m)");
  EXPECT_EQ(print_formula(Formula::bang(A("e"))), "!e");
  EXPECT_EQ(print_formula(Formula::bang(Formula::bang(A("e")))), "!!e");
  EXPECT_EQ(print_formula(Formula::tensor({Formula::bang(Formula::tensor({A("a"), A("b")})), A("c")})),
            "!(a * b) * c");
}

TEST(PrintFormula, RoundTripsThroughParser) {
  for (const char* s : {"!(e -o t)", "t * m -o f1 & f2", "e", "(a -o b) -o c", "a * (b -o c)",
                        "!(a & b) * !c", "(a * b & c) * d"}) {
    Formula f = parse_formula(s);
    EXPECT_EQ(parse_formula(print_formula(f)), f) << s;
  }
}

TEST(Identifier, FollowsCIdentifierShape) {
  EXPECT_TRUE(llx::is_identifier("val_slice"));
  EXPECT_TRUE(llx::is_identifier("_x1"));
  EXPECT_FALSE(llx::is_identifier(""));
  EXPECT_FALSE(llx::is_identifier("1x"));
  EXPECT_FALSE(llx::is_identifier("a-b"));
}
