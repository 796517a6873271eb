#include <gtest/gtest.h>

#include "htcraig/interpolation.hpp"
#include "htcraig/json_io.hpp"
#include "htcraig/normalize.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace htcraig;
using namespace htcraig::testing;

namespace {

Formula f(const char* text) { return parse(text); }

bool voc_within(const Formula& c, const Formula& a, const Formula& b) {
  auto va = voc(a);
  auto vb = voc(b);
  for (const auto& x : voc(c)) {
    if (!va.count(x) || !vb.count(x)) return false;
  }
  return true;
}

} // namespace

TEST(Stage1, SharedConsequent) {
  auto s1 = stage1(f("q"), f("p -> q"));
  ASSERT_TRUE(s1.interpolant);
  EXPECT_EQ(*s1.interpolant, f("q"));
  ASSERT_TRUE(s1.proof);
  EXPECT_EQ(s1.proof->interpolant, f("q & q"));
}

TEST(Stage1, ImplicationIdentity) {
  auto s1 = stage1(f("p -> q"), f("p -> q"));
  ASSERT_TRUE(s1.interpolant);
  EXPECT_TRUE(in_class(*s1.interpolant, FormulaClass::NH_NNF));
  EXPECT_TRUE(ref_equivalent(*s1.interpolant, f("(~p | nh(p) | q) & (~p | ~~q | q)")))
      << print(*s1.interpolant);
}

TEST(Stage1, ContradictoryLeft) {
  auto s1 = stage1(f("q & ~q"), f("r"));
  ASSERT_TRUE(s1.interpolant);
  EXPECT_EQ(*s1.interpolant, Formula::falsum());
}

TEST(Stage1, RejectsNonHtInput) {
  EXPECT_THROW(stage1(f("nh(p)"), f("p")), std::invalid_argument);
  EXPECT_THROW(craig_interpolant(f("p"), f("nh(p)")), std::invalid_argument);
}

TEST(Strengthen, Examples) {
  EXPECT_EQ(strengthen(f("nh(e) | g")), f("e -> g"));
  EXPECT_EQ(strengthen(f("g")), f("g"));
  EXPECT_EQ(strengthen(f("nh(a)")), f("a -> false"));
  EXPECT_TRUE(ref_equivalent(strengthen(f("nh(a)")), f("~a")));
  EXPECT_TRUE(ref_entails(f("a -> false"), f("nh(a)")));
  EXPECT_EQ(strengthen(f("true")), f("true"));
  EXPECT_EQ(strengthen(f("nh(a) | nh(b) | ~c")), f("a & b -> ~c"));
  EXPECT_THROW(strengthen(f("p -> q")), NormalFormError);
}

TEST(Strengthen, EntailsItsInput) {
  Rng rng(12);
  auto atoms = atom_names(4);
  for (int i = 0; i < 1000; ++i) {
    Formula x = random_nh_nnf(rng, atoms, 4);
    Formula c = strengthen(x);
    EXPECT_TRUE(in_class(c, FormulaClass::HT));
    EXPECT_TRUE(ref_entails(c, x)) << print(x);
    auto vx = voc(x);
    for (const auto& a : voc(c)) EXPECT_TRUE(vx.count(a));
  }
}

TEST(Tidy, FlattensDedupesAndAbsorbs) {
  EXPECT_EQ(tidy(f("q & q")), f("q"));
  EXPECT_EQ(tidy(f("(p | q) | (p | false)")), f("p | q"));
  EXPECT_EQ(tidy(f("p & (q & true) & (p & q)")), f("p & q"));
  EXPECT_EQ(tidy(f("p | true")), f("true"));
  EXPECT_EQ(tidy(f("(q & q) -> (r | r)")), f("q -> r"));
  EXPECT_EQ(tidy(f("~(p & p)")), f("~p"));
}

TEST(Tidy, PreservesEquivalence) {
  Rng rng(13);
  auto atoms = atom_names(3);
  for (int i = 0; i < 1500; ++i) {
    Formula x = i % 2 ? random_ht(rng, atoms, 5) : random_nh_nnf(rng, atoms, 5);
    Formula y = tidy(x);
    EXPECT_TRUE(ref_equivalent(x, y)) << print(x);
    if (in_class(x, FormulaClass::NH_NNF)) {
      EXPECT_TRUE(in_class(y, FormulaClass::NH_NNF));
    }
  }
}

TEST(CraigInterpolant, Examples) {
  auto r = craig_interpolant(f("p & q"), f("p | r"));
  ASSERT_EQ(r.status, InterpolationStatus::Entails);
  ASSERT_TRUE(r.final);
  EXPECT_TRUE(ref_equivalent(*r.final, f("p"))) << print(*r.final);
  EXPECT_TRUE(r.report.all());

  r = craig_interpolant(f("~~p"), f("p"));
  ASSERT_EQ(r.status, InterpolationStatus::NotEntails);
  ASSERT_TRUE(r.countermodel);
  EXPECT_EQ(format_assignment(*r.countermodel), "p=NF");
  EXPECT_FALSE(r.final);

  r = craig_interpolant(f("p"), f("p"));
  ASSERT_EQ(r.status, InterpolationStatus::Entails);
  EXPECT_EQ(*r.final, f("p"));
}

TEST(CraigInterpolant, DisjointVocabulary) {
  auto r = craig_interpolant(f("q & ~q"), f("r"));
  ASSERT_EQ(r.status, InterpolationStatus::Entails);
  EXPECT_EQ(*r.final, Formula::falsum());
  EXPECT_TRUE(r.report.all());

  r = craig_interpolant(f("q"), f("r -> r"));
  ASSERT_EQ(r.status, InterpolationStatus::Entails);
  EXPECT_EQ(*r.final, Formula::verum());
}

TEST(CraigInterpolant, NormalizesTheRightFormula) {
  auto r = craig_interpolant(f("r"), f("(p -> q) -> r"));
  ASSERT_EQ(r.status, InterpolationStatus::Entails);
  EXPECT_TRUE(is_body_normalized(r.normalized_b));
  EXPECT_NE(r.normalized_b, f("(p -> q) -> r"));
  EXPECT_TRUE(r.report.all());
}

TEST(CraigInterpolant, RandomPairsVerify) {
  Rng rng(14);
  auto atoms = atom_names(3);
  int entailing = 0;
  for (int i = 0; i < 1500; ++i) {
    Formula a = random_ht(rng, atoms, 4);
    Formula b = random_ht(rng, atoms, 4);
    auto r = craig_interpolant(a, b);
    ASSERT_EQ(r.status == InterpolationStatus::Entails, ref_entails(a, b));
    if (r.status != InterpolationStatus::Entails) continue;
    ++entailing;
    const Formula& c = *r.final;
    EXPECT_TRUE(ref_entails(a, c)) << print(a) << " / " << print(c);
    EXPECT_TRUE(ref_entails(c, b)) << print(c) << " / " << print(b);
    EXPECT_TRUE(voc_within(c, a, b));
    EXPECT_TRUE(in_class(c, FormulaClass::HT));
    EXPECT_TRUE(in_class(*r.stage1, FormulaClass::NH_NNF));
    EXPECT_TRUE(r.report.all());
  }
  EXPECT_GT(entailing, 100);
}

TEST(CraigInterpolant, Deterministic) {
  auto r1 = craig_interpolant(f("(p -> q) & (q -> r)"), f("p -> r"));
  auto r2 = craig_interpolant(f("(p -> q) & (q -> r)"), f("p -> r"));
  EXPECT_EQ(to_json(r1).dump(), to_json(r2).dump());
}

TEST(VerifyInterpolant, Examples) {
  auto r = verify_interpolant(f("p & q"), f("p"), f("p | r"));
  EXPECT_TRUE(r.all());

  r = verify_interpolant(f("p"), f("q"), f("q | p"));
  EXPECT_FALSE(r.a_entails_c);
  ASSERT_TRUE(r.countermodel);
  EXPECT_EQ(format_assignment(*r.countermodel), "p=NF,q=F");
  EXPECT_FALSE(r.voc_ok);

  r = verify_interpolant(f("p -> q"), f("p -> q"), f("p -> q"));
  EXPECT_TRUE(r.all());
}

TEST(Json, ResultSchema) {
  auto j = to_json(craig_interpolant(f("p & q"), f("p | r")));
  for (const char* key : {"status", "interpolant", "stage1", "countermodel", "verification", "proof"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["status"], "entails");
  EXPECT_TRUE(j["countermodel"].is_null());
  const auto& proof = j["proof"];
  EXPECT_TRUE(proof["rule"].is_string());
  EXPECT_TRUE(proof["sequent"]["ant"].is_array());
  EXPECT_EQ(proof["sequent"]["ant"][0]["prov"], "L");
  EXPECT_EQ(proof["sequent"]["suc"][0]["f"], "p | r");
  EXPECT_TRUE(proof["interpolant"].is_string());
  EXPECT_TRUE(proof["premises"].is_array());

  auto k = to_json(craig_interpolant(f("~~p"), f("p")));
  EXPECT_EQ(k["status"], "not-entails");
  EXPECT_EQ(k["countermodel"]["p"], "NF");
  EXPECT_TRUE(k["interpolant"].is_null());
}
