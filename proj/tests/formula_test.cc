#include "expertise/formula.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace expertise {
namespace {

using F = Formula;

const F p = F::Atom("p");
const F q = F::Atom("q");
const F r = F::Atom("r");

TEST(ParseTest, SingleOperator) { EXPECT_EQ(Parse("E r"), F::E(r)); }

TEST(ParseTest, SoundnessOfConjunction) {
  EXPECT_EQ(Parse("S (r & p)"), F::S(F::And(r, p)));
}

TEST(ParseTest, NegatedExpertise) { EXPECT_EQ(Parse("~E p"), F::Not(F::E(p))); }

TEST(ParseTest, ImplicationAssociatesRight) {
  const F expected = F::Not(F::And(p, F::Not(F::Not(F::And(q, F::Not(r))))));
  EXPECT_EQ(Parse("p -> q -> r"), expected);
  EXPECT_EQ(Parse("p -> q -> r"), Parse("p -> (q -> r)"));
  EXPECT_FALSE(Parse("p -> q -> r") == Parse("(p -> q) -> r"));
}

TEST(ParseTest, Precedence) {
  EXPECT_EQ(Parse("~p & q"), F::And(F::Not(p), q));
  EXPECT_EQ(Parse("p & q | r"), F::Or(F::And(p, q), r));
  EXPECT_EQ(Parse("p | q -> r"), F::Implies(F::Or(p, q), r));
  EXPECT_EQ(Parse("p -> q <-> r"), F::Iff(F::Implies(p, q), r));
  EXPECT_EQ(Parse("E p & q"), F::And(F::E(p), q));
  EXPECT_EQ(Parse("p & q & r"), F::And(F::And(p, q), r));
}

TEST(ParseTest, DualsDesugar) {
  EXPECT_EQ(Parse("E^ p"), F::Not(F::E(F::Not(p))));
  EXPECT_EQ(Parse("S^ p"), F::Not(F::S(F::Not(p))));
  EXPECT_EQ(Parse("A^ (S p & ~p)"), F::Not(F::A(F::Not(F::And(F::S(p), F::Not(p))))));
  EXPECT_EQ(Parse("K^ p"), F::Not(F::K(F::Not(p))));
}

TEST(ParseTest, Constants) {
  EXPECT_EQ(Parse("T"), F::Top());
  EXPECT_EQ(Parse("F"), F::Bottom());
  EXPECT_EQ(Parse("~T"), F::Bottom());
  EXPECT_TRUE(Atoms(Parse("T & F")).empty());
}

TEST(ParseTest, OperatorLetterWithoutSpace) {
  EXPECT_EQ(Parse("E(p -> q)"), F::E(F::Implies(p, q)));
  EXPECT_EQ(Parse("~S~ (p -> p)"), F::Not(F::S(F::Not(F::Implies(p, p)))));
}

TEST(ParseTest, Identifiers) {
  EXPECT_EQ(Parse("rain_2 & x0"), F::And(F::Atom("rain_2"), F::Atom("x0")));
}

TEST(ParseTest, SyntaxErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t position;
  };
  for (const Case& c : {Case{"p &", 3}, Case{"(p", 2}, Case{"p q", 2}, Case{"", 0},
                        Case{"p <-> q <-> r", 8}, Case{")", 0}}) {
    try {
      Parse(c.text);
      ADD_FAILURE() << "accepted " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ParseError::Kind::kSyntax) << c.text;
      EXPECT_EQ(e.position(), c.position) << c.text;
    }
  }
}

TEST(ParseTest, UnknownOperatorsAreDistinct) {
  for (const char* text : {"p => q", "B p", "p ^ q", "!p", "p -- q", "p <- q", "P"}) {
    try {
      Parse(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ParseError::Kind::kUnknownOperator) << text;
    }
  }
}

TEST(RenderTest, Examples) {
  EXPECT_EQ(Render(F::E(r)), "E r");
  EXPECT_EQ(Render(F::And(F::E(r), F::Not(F::E(p)))), "E r & ~E p");
  EXPECT_EQ(Render(TranslateT(Parse("E p"))), "A (p -> K p)");
}

TEST(RenderTest, MinimalParentheses) {
  EXPECT_EQ(Render(Parse("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(Render(Parse("p -> (q -> r)")), "p -> q -> r");
  EXPECT_EQ(Render(Parse("p & (q & r)")), "p & (q & r)");
  EXPECT_EQ(Render(Parse("(p & q) & r")), "p & q & r");
  EXPECT_EQ(Render(Parse("(p <-> q) <-> r")), "(p <-> q) <-> r");
  EXPECT_EQ(Render(Parse("~(p & q)")), "~(p & q)");
  EXPECT_EQ(Render(Parse("~~p")), "~~p");
  EXPECT_EQ(Render(Parse("T -> F")), "T -> F");
}

TEST(RenderTest, ModalOperandsOfBinaryOrModalShapeAreBracketed) {
  EXPECT_EQ(Render(Parse("S A p")), "S (A p)");
  EXPECT_EQ(Render(Parse("~K ~~p")), "~K ~~p");
  EXPECT_EQ(Render(Parse("~S ~(p -> p)")), "~S ~(p -> p)");
}

TEST(RenderTest, DisjunctionRendersAsImplication) {
  // ~(~p & ~q) is also ~p -> q; the renderer prefers the implication.
  EXPECT_EQ(Render(Parse("p | q")), "~p -> q");
}

TEST(TranslateTest, Examples) {
  EXPECT_EQ(Render(TranslateT(Parse("S q"))), "~K ~q");
  EXPECT_EQ(Render(TranslateT(Parse("E p"))), "A (p -> K p)");
  EXPECT_EQ(TranslateT(Parse("p & A p")), Parse("p & A p"));
  EXPECT_EQ(Render(TranslateT(Parse("S ~p"))), "~K ~~p");
}

TEST(TranslateTest, RejectsK) { EXPECT_THROW(TranslateT(Parse("K p")), LanguageError); }

TEST(EmbedTest, Examples) {
  EXPECT_EQ(Render(EmbedG(Parse("E p"))), "A (S p -> p)");
  EXPECT_EQ(EmbedG(Parse("S p")), Parse("S p"));
  // g(E E p) = A(S g(E p) -> g(E p)) with g(E p) = A(S p -> p).
  EXPECT_EQ(Render(EmbedG(Parse("E E p"))), "A (S (A (S p -> p)) -> A (S p -> p))");
  EXPECT_THROW(EmbedG(Parse("E K p")), LanguageError);
}

TEST(LanguageTest, MembershipPredicates) {
  EXPECT_TRUE(InL(Parse("E p & S q & A r")));
  EXPECT_FALSE(InL(Parse("K p")));
  EXPECT_TRUE(InLSA(Parse("S p & A q")));
  EXPECT_FALSE(InLSA(Parse("E p")));
  EXPECT_TRUE(InLKA(Parse("K p & A q")));
  EXPECT_FALSE(InLKA(Parse("S p")));
}

TEST(FormulaTest, AtomsAndSizes) {
  EXPECT_EQ(Atoms(Parse("E (q -> p) & S q & T")), (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(Parse("E S p").modal_depth(), 2u);
  EXPECT_EQ(Parse("p & ~q").size(), 4u);
}

// Properties over random formulas -------------------------------------------

TEST(FormulaProperty, RenderParseRoundTrip) {
  oracle::FormulaGen gen(20240611, {"p", "q", "r"});
  oracle::FormulaGen rel(7, {"p", "q"}, /*relational=*/true);
  for (int i = 0; i < 2000; ++i) {
    for (const F& f : {gen.Next(5), rel.Next(5)}) {
      const std::string text = Render(f);
      EXPECT_EQ(Parse(text), f) << text;
    }
  }
}

TEST(FormulaProperty, RoundTripThroughSugar) {
  // Sugar-built formulas re-sugar on render and parse back unchanged.
  oracle::FormulaGen gen(99, {"p", "q"});
  for (int i = 0; i < 500; ++i) {
    const F a = gen.Next(3);
    const F b = gen.Next(3);
    for (const F& f : {F::Implies(a, b), F::Iff(a, b), F::Or(a, b), F::SHat(a), F::EHat(b),
                       F::Implies(F::Top(), F::Bottom())})
      EXPECT_EQ(Parse(Render(f)), f) << Render(f);
  }
}

TEST(FormulaProperty, TranslationsLandInTheirFragments) {
  oracle::FormulaGen gen(4242, {"p", "q"});
  for (int i = 0; i < 1000; ++i) {
    const F f = gen.Next(4);
    const F t = TranslateT(f);
    const F g = EmbedG(f);
    EXPECT_TRUE(InLKA(t));
    EXPECT_TRUE(InLSA(g));
    EXPECT_GE(t.size(), f.size());
    EXPECT_GE(g.size(), f.size());
    if (!ContainsOp(f, Op::kE)) EXPECT_EQ(g, f);
    if (!ContainsOp(f, Op::kE) && !ContainsOp(f, Op::kS)) EXPECT_EQ(t, f);
  }
}

}  // namespace
}  // namespace expertise
