#include <gtest/gtest.h>

#include "pumplab/derive.hpp"
#include "pumplab/error.hpp"
#include "pumplab/normal_forms.hpp"
#include "test_support.hpp"

namespace pumplab {
namespace {

using testing::bundled;
using testing::bundled_names;
using testing::G;
using testing::reference_language;

std::set<Word> nonempty(std::set<Word> words) {
  words.erase(Word{});
  return words;
}

TEST(Shape, KRatedRules) {
  auto g = G("S -> a S b b | a b | a b c");
  EXPECT_TRUE(rule_has_shape(g, g.rules[0], NormalFormKind::KRated, Ratio(2, 1)));
  EXPECT_TRUE(rule_has_shape(g, g.rules[1], NormalFormKind::KRated, Ratio(2, 1)));
  EXPECT_FALSE(rule_has_shape(g, g.rules[2], NormalFormKind::KRated, Ratio(2, 1)));
  EXPECT_FALSE(rule_has_shape(g, g.rules[0], NormalFormKind::KRated, Ratio(1, 1)));
}

TEST(Shape, ChomskyStartLambda) {
  EXPECT_TRUE(has_shape(G("S -> A B | @eps\nA -> a\nB -> b"), NormalFormKind::Chomsky));
  EXPECT_FALSE(has_shape(G("S -> A S | @eps\nA -> a"), NormalFormKind::Chomsky));
  EXPECT_FALSE(has_shape(G("S -> A | a\nA -> a"), NormalFormKind::Chomsky));
}

TEST(KRatedNf, AlreadyNormalIsUnchanged) {
  auto g = bundled("k21");
  EXPECT_EQ(to_k_rated_nf(g, Ratio(2, 1)), g);
}

TEST(KRatedNf, ChainsLongRules) {
  auto g = G("S -> a a S b b | a a b b b | T\nT -> c");
  auto nf = to_k_rated_nf(g, Ratio(1, 1));
  EXPECT_EQ(format_grammar(nf),
            "start: S\n"
            "nonterminals: S T S#1 S#2 S#3\n"
            "terminals: a b c\n"
            "S -> a S#1 b\n"
            "S#1 -> a S b\n"
            "S -> a S#2 b\n"
            "S#2 -> a S#3 b\n"
            "S#3 -> b\n"
            "T -> c\n"
            "S -> c\n");
  EXPECT_TRUE(has_shape(nf, NormalFormKind::KRated, Ratio(1, 1)));
  EXPECT_TRUE(bounded_equivalent(g, nf).equivalent);
}

TEST(KRatedNf, RegularEndsInLambda) {
  auto nf = to_regular_nf(G("S -> a b S | a b a"));
  EXPECT_TRUE(has_shape(nf, NormalFormKind::Regular));
  EXPECT_TRUE(has_shape(nf, NormalFormKind::KRated, Ratio(0, 1)));
  EXPECT_EQ(nonempty(enumerate(nf, 9)), nonempty(reference_language(G("S -> a b S | a b a"), 9)));
}

TEST(KRatedNf, WrongRatioThrows) {
  try {
    to_k_rated_nf(bundled("anbn"), Ratio(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInClass);
  }
  EXPECT_THROW(to_k_rated_nf(bundled("linear"), Ratio(1, 1)), Error);
  EXPECT_THROW(to_regular_nf(bundled("even")), Error);
}

TEST(LinearUnitNf, PeelsPrefixThenSuffix) {
  auto nf = to_linear_unit_nf(G("S -> a b S b a | c"));
  EXPECT_EQ(format_grammar(nf),
            "start: S\n"
            "nonterminals: S S#1 S#2 S#3\n"
            "terminals: a b c\n"
            "S -> a S#1\n"
            "S#1 -> b S#2\n"
            "S#2 -> S#3 a\n"
            "S#3 -> S b\n"
            "S -> c\n");
  EXPECT_TRUE(has_shape(nf, NormalFormKind::LinearUnit));
}

TEST(LinearUnitNf, RejectsNonLinear) {
  EXPECT_THROW(to_linear_unit_nf(bundled("dyck")), Error);
}

TEST(Cnf, AnbnGolden) {
  auto nf = to_cnf(bundled("anbn"));
  EXPECT_EQ(nf.start, "S#1");
  EXPECT_TRUE(has_shape(nf, NormalFormKind::Chomsky));
  EXPECT_EQ(nf.nonterminals, (std::vector<std::string>{"S#1", "S", "a#1", "b#1", "S#2"}));
}

TEST(Cnf, KeepsLambdaOnlyAtStart) {
  auto nf = to_cnf(bundled("dyck"));
  EXPECT_TRUE(has_shape(nf, NormalFormKind::Chomsky));
  EXPECT_TRUE(CykParser(nf).accepts(Word{}));
  EXPECT_EQ(enumerate(nf, 8), reference_language(bundled("dyck"), 8));
}

TEST(Cnf, EmptyLanguageThrows) {
  EXPECT_THROW(to_cnf(G("S -> a S")), Error);
}

TEST(UnitElimination, RemovesChains) {
  auto g = eliminate_unit_rules(G("S -> A | s\nA -> B | a\nB -> S | b"));
  for (const auto& r : g.rules) EXPECT_FALSE(r.is_unit()) << format_rule(r);
  EXPECT_EQ(enumerate(g, 1), (std::set<Word>{Word{"s"}, Word{"a"}, Word{"b"}}));
}

TEST(LambdaElimination, KeepsStartLambdaOnRequest) {
  auto g = G("S -> A S B | c\nA -> a | @eps\nB -> @eps");
  auto kept = eliminate_lambda_rules(G("S -> a S | @eps"), true);
  EXPECT_TRUE(enumerate(kept, 0).count(Word{}));
  auto dropped = eliminate_lambda_rules(g, false);
  for (const auto& r : dropped.rules) EXPECT_FALSE(r.rhs.empty()) << format_rule(r);
  EXPECT_EQ(enumerate(dropped, 6), nonempty(reference_language(g, 6)));
}

// Every transformation preserves the language on every bundled grammar it
// applies to, compared against the independent reference enumerator.
TEST(Transformations, PreserveBundledLanguages) {
  for (const auto& name : bundled_names()) {
    auto g = bundled(name);
    auto want = nonempty(reference_language(g, 9));
    auto cnf = to_cnf(g);
    EXPECT_TRUE(has_shape(cnf, NormalFormKind::Chomsky)) << name;
    EXPECT_EQ(nonempty(enumerate(cnf, 9)), want) << name << " cnf";
    auto rep = classify(g);
    if (rep.linear.holds) {
      auto lu = to_linear_unit_nf(g);
      EXPECT_TRUE(has_shape(lu, NormalFormKind::LinearUnit)) << name;
      EXPECT_EQ(nonempty(enumerate(lu, 9)), want) << name << " linear-unit";
    }
    if (rep.k_rated.holds && !rep.ratio_free) {
      auto kr = to_k_rated_nf(g, *rep.ratio);
      EXPECT_TRUE(has_shape(kr, NormalFormKind::KRated, *rep.ratio)) << name;
      EXPECT_EQ(nonempty(enumerate(kr, 9)), want) << name << " k-rated";
    }
  }
}

TEST(Transformations, RandomLinearGrammars) {
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testing::random_linear_grammar();
    auto want = nonempty(reference_language(g, 7));
    std::set<Word> got_cnf;
    try {
      got_cnf = nonempty(enumerate(to_cnf(g), 7));
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::EmptyLanguage);
    }
    EXPECT_EQ(got_cnf, want) << format_grammar(g);
    auto lu = to_linear_unit_nf(g);
    EXPECT_TRUE(has_shape(lu, NormalFormKind::LinearUnit)) << format_grammar(g);
    EXPECT_EQ(nonempty(enumerate(lu, 7)), want) << format_grammar(g);
  }
}

TEST(BoundedEquivalent, FindsShortestWitness) {
  auto r = bounded_equivalent(bundled("anbn"), G("S -> a S b | a b | a a b b b"));
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.witness, std::optional<Word>(testing::W("aabbb")));
  EXPECT_TRUE(bounded_equivalent(bundled("anbn"), bundled("even")).equivalent);
}

}  // namespace
}  // namespace pumplab
