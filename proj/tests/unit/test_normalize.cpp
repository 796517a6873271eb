#include <gtest/gtest.h>

#include "htcraig/normalize.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace htcraig;
using namespace htcraig::testing;

TEST(PushNegations, Examples) {
  EXPECT_EQ(push_negations(parse("~(p -> q)")), parse("~~p & ~q"));
  EXPECT_EQ(push_negations(parse("~~~p")), parse("~p"));
  EXPECT_EQ(push_negations(parse("~p")), parse("~p"));
  EXPECT_EQ(push_negations(parse("~(p & ~q)")), parse("~p | ~~q"));
  EXPECT_EQ(push_negations(parse("~true | ~false")), parse("false | true"));
  EXPECT_EQ(push_negations(parse("~~nh(p)")), parse("nh(p)"));
  EXPECT_THROW(push_negations(parse("~nh(p)")), NormalFormError);
}

TEST(PushNegations, EquivalentAndNegationsOnLiterals) {
  Rng rng(1);
  auto atoms = atom_names(3);
  std::function<bool(const Formula&)> ok = [&](const Formula& f) {
    switch (f.kind()) {
    case Connective::Not:
      return f.operand().is(Connective::Atom) ||
             (f.operand().is(Connective::Not) && f.operand().operand().is(Connective::Atom));
    case Connective::Nh:
      return ok(f.operand());
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      return ok(f.left()) && ok(f.right());
    default:
      return true;
    }
  };
  for (int i = 0; i < 1500; ++i) {
    Formula f = random_ht(rng, atoms, 5);
    Formula g = push_negations(f);
    EXPECT_TRUE(ok(g)) << print(g);
    EXPECT_TRUE(ref_equivalent(f, g)) << print(f) << " vs " << print(g);
  }
}

TEST(PushNh, Examples) {
  EXPECT_EQ(push_nh(parse("nh(p & q)")), parse("nh(p) | nh(q)"));
  EXPECT_EQ(push_nh(parse("nh(~p)")), parse("~~p"));
  EXPECT_EQ(push_nh(parse("nh(false)")), parse("true"));
  EXPECT_EQ(push_nh(parse("nh(true)")), parse("false"));
  EXPECT_EQ(push_nh(parse("nh(p | q)")), parse("nh(p) & nh(q)"));
  EXPECT_THROW(push_nh(parse("nh(p -> q)")), NormalFormError);
  EXPECT_THROW(push_nh(parse("nh(nh(p))")), NormalFormError);
}

TEST(ToNhNnf, Examples) {
  EXPECT_EQ(to_nh_nnf(parse("~(p | q)")), parse("~p & ~q"));
  EXPECT_EQ(to_nh_nnf(parse("nh(p | ~q)")), parse("nh(p) & ~~q"));
  EXPECT_EQ(to_nh_nnf(parse("p")), parse("p"));
  EXPECT_THROW(to_nh_nnf(parse("p -> q")), NormalFormError);
}

TEST(ToNhNnf, ClassEquivalenceAndLinearSize) {
  Rng rng(2);
  auto atoms = atom_names(4);
  for (int i = 0; i < 3000; ++i) {
    Formula f = random_nh(rng, atoms, 6);
    Formula g = to_nh_nnf(f);
    EXPECT_TRUE(in_class(g, FormulaClass::NH_NNF)) << print(g);
    EXPECT_TRUE(ref_equivalent(f, g)) << print(f);
    EXPECT_LE(g.size(), 4 * f.size()) << print(f);
  }
}

TEST(BodyNormalize, Examples) {
  EXPECT_EQ(body_normalize(parse("(p -> q) -> r")),
            parse("(~p -> r) & (q -> r) & (r | p | ~q)"));
  EXPECT_EQ(body_normalize(parse("p -> q")), parse("p -> q"));
  EXPECT_EQ(body_normalize(parse("(p -> q) & r")), parse("(p -> q) & r"));
  EXPECT_TRUE(ref_equivalent(parse("(p -> q) -> r"), body_normalize(parse("(p -> q) -> r"))));
  EXPECT_THROW(body_normalize(parse("nh(p)")), NormalFormError);
}

TEST(BodyNormalize, PropertiesOnRandomFormulas) {
  Rng rng(3);
  auto atoms = atom_names(3);
  for (int i = 0; i < 1500; ++i) {
    Formula f = random_ht(rng, atoms, 5);
    Formula g = body_normalize(f);
    EXPECT_TRUE(is_body_normalized(g)) << print(g);
    EXPECT_TRUE(in_class(g, FormulaClass::HT));
    EXPECT_TRUE(ref_equivalent(f, g)) << print(f) << " vs " << print(g);
    auto vf = voc(f);
    for (const auto& a : voc(g)) EXPECT_TRUE(vf.count(a));
  }
  EXPECT_FALSE(is_body_normalized(parse("(p -> q) -> r")));
  EXPECT_TRUE(is_body_normalized(parse("p -> q -> r")));
}

TEST(ToCnf, Examples) {
  auto c = to_cnf(parse("nh(p) | (q & r)"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].to_formula(), parse("nh(p) | q"));
  EXPECT_EQ(c[1].to_formula(), parse("nh(p) | r"));

  auto single = to_cnf(parse("p"));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].to_formula(), parse("p"));

  auto already = to_cnf(parse("(nh(p) | q) & ~~r"));
  ASSERT_EQ(already.size(), 2u);
  EXPECT_EQ(already[0].nh_atoms, std::vector<std::string>{"p"});
  EXPECT_EQ(cnf_to_formula(already), parse("(nh(p) | q) & ~~r"));

  EXPECT_TRUE(to_cnf(parse("true")).empty());
  EXPECT_EQ(cnf_to_formula(to_cnf(parse("false"))), parse("false"));
  EXPECT_THROW(to_cnf(parse("~(p & q)")), NormalFormError);
}

TEST(ToCnf, RoundTripOnRandomNhNnf) {
  Rng rng(4);
  auto atoms = atom_names(4);
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_nh_nnf(rng, atoms, 4);
    auto clauses = to_cnf(f);
    for (const auto& c : clauses) {
      for (const auto& lit : c.rest) EXPECT_FALSE(lit.contains(Connective::Nh));
    }
    Formula g = cnf_to_formula(clauses);
    EXPECT_TRUE(ref_equivalent(f, g)) << print(f);
    auto vf = voc(f);
    for (const auto& a : voc(g)) EXPECT_TRUE(vf.count(a));
  }
}

TEST(SimplifyConstants, Examples) {
  EXPECT_EQ(simplify_constants(parse("p & true")), parse("p"));
  EXPECT_EQ(simplify_constants(parse("false -> p")), parse("true"));
  EXPECT_EQ(simplify_constants(parse("p | q")), parse("p | q"));
  EXPECT_EQ(simplify_constants(parse("true -> p")), parse("p"));
  EXPECT_EQ(simplify_constants(parse("p -> false")), parse("p -> false"));
  EXPECT_EQ(simplify_constants(parse("~(p | true)")), parse("false"));
  EXPECT_EQ(simplify_constants(parse("nh(false) & q")), parse("q"));
}

TEST(SimplifyConstants, EquivalentAndIdempotent) {
  Rng rng(6);
  auto atoms = atom_names(3);
  for (int i = 0; i < 2000; ++i) {
    Formula f = i % 2 ? random_ht(rng, atoms, 5) : random_nh(rng, atoms, 5);
    Formula g = simplify_constants(f);
    EXPECT_TRUE(ref_equivalent(f, g)) << print(f);
    EXPECT_EQ(simplify_constants(g), g) << print(f);
  }
}

TEST(ToCnf, DropsSubsumedAndValidClauses) {
  auto c = to_cnf(parse("p & (p | q)"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].to_formula(), parse("p"));

  EXPECT_TRUE(to_cnf(parse("p | nh(p)")).empty());
  EXPECT_TRUE(to_cnf(parse("(~q | ~~q) & (nh(r) | r | s)")).empty());
  EXPECT_EQ(to_cnf(parse("(q & r) | (q & s)")).size(), 2u);
  EXPECT_TRUE(ref_equivalent(Formula::verum(), parse("~q | ~~q")));
  EXPECT_TRUE(ref_equivalent(Formula::verum(), parse("p | nh(p)")));
}

TEST(BodyNormalize, NestedAntecedentsStaySmall) {
  Formula f = parse("((((p -> q) -> r) -> s) -> p) -> q");
  Formula g = body_normalize(f);
  EXPECT_TRUE(is_body_normalized(g));
  EXPECT_TRUE(ref_equivalent(f, g));
  EXPECT_LT(g.size(), 200u);
}
