#include <gtest/gtest.h>

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "pumplab/derive.hpp"
#include "pumplab/error.hpp"
#include "pumplab/normal_forms.hpp"
#include "test_support.hpp"

namespace pumplab {
namespace {

using testing::all_words;
using testing::bundled;
using testing::bundled_names;
using testing::G;
using testing::reference_language;
using testing::W;

TEST(Enumerate, MatchesReferenceOnBundledGrammars) {
  for (const auto& name : bundled_names()) {
    auto g = bundled(name);
    EXPECT_EQ(enumerate(g, 10), reference_language(g, 10)) << name;
  }
}

TEST(Enumerate, CapIsEnforced) {
  try {
    enumerate(bundled("even"), 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_EQ(enumerate(bundled("even"), 40, 40).size(), 21u);
}

TEST(Enumerate, DyckCountsAreCatalan) {
  auto words = enumerate(bundled("dyck"), 12);
  std::map<std::size_t, std::size_t> by_len;
  for (const auto& w : words) ++by_len[w.size()];
  std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 0; n < catalan.size(); ++n) EXPECT_EQ(by_len[2 * n], catalan[n]) << n;
}

TEST(ParseLinear, AgreesWithMembershipOnAllShortWords) {
  for (const auto& name : {"even", "anbn", "palindrome", "k21", "k12", "linear", "leftright"}) {
    auto g = bundled(name);
    auto lang = reference_language(g, 8);
    for (const auto& w : all_words(g.terminals, 8)) {
      auto trace = parse_linear(g, w);
      ASSERT_EQ(trace.has_value(), lang.count(w) > 0) << name << " " << format_word(w);
      if (trace) {
        EXPECT_EQ(trace->yield(), w);
        EXPECT_EQ(replay(g, *trace), w);
        EXPECT_EQ(trace->nonterminals().size(), trace->steps.size() + 1);
      }
    }
  }
}

TEST(ParseLinear, TraceGolden) {
  auto g = bundled("k21");
  auto trace = parse_linear(g, W("aaabbbbb"));
  ASSERT_TRUE(trace);
  ASSERT_EQ(trace->steps.size(), 2u);
  EXPECT_EQ(trace->steps[0].prefix, W("a"));
  EXPECT_EQ(trace->steps[0].suffix, W("bb"));
  EXPECT_EQ(trace->tail.word, W("ab"));
  EXPECT_EQ(trace->tail.rule, 1u);
}

TEST(ParseLinear, RejectsNonLinear) {
  EXPECT_THROW(parse_linear(bundled("dyck"), W("()")), Error);
}

TEST(Replay, DetectsTampering) {
  auto g = bundled("even");
  auto trace = *parse_linear(g, W("aabb"));
  trace.steps[0].prefix = W("b");
  EXPECT_THROW(replay(g, trace), Error);
  trace = *parse_linear(g, W("aabb"));
  trace.start = "X";
  EXPECT_THROW(replay(g, trace), Error);
}

TEST(Cyk, AgreesWithEnumerationOnEveryBundledGrammar) {
  for (const auto& name : bundled_names()) {
    auto g = bundled(name);
    CykParser parser(to_cnf(g));
    auto lang = reference_language(g, 8);
    for (const auto& w : all_words(g.terminals, 8)) {
      auto tree = parser.parse(w);
      ASSERT_EQ(tree.has_value(), lang.count(w) > 0) << name << " " << format_word(w);
      EXPECT_EQ(parser.accepts(w), tree.has_value());
      if (tree) {
        EXPECT_EQ(tree->yield(), w);
        EXPECT_EQ(replay(parser.grammar(), *tree), w);
      }
    }
  }
}

TEST(Cyk, RequiresChomskyShape) {
  EXPECT_THROW(CykParser(bundled("anbn")), Error);
  EXPECT_THROW(parse_cyk(bundled("anbn"), W("ab")), Error);
}

TEST(Cyk, HeightCountsNonterminalNodes) {
  auto cnf = G("S -> A B\nA -> a\nB -> b");
  auto tree = parse_cyk(cnf, W("ab"));
  ASSERT_TRUE(tree);
  EXPECT_EQ(tree->height(), 2u);
}

TEST(DerivationTree, JsonRoundTrip) {
  auto cnf = to_cnf(bundled("dyck"));
  auto tree = *parse_cyk(cnf, W("(()())"));
  nlohmann::json j = tree;
  EXPECT_EQ(j.at("symbol"), cnf.start);
  auto back = j.get<DerivationTree>();
  EXPECT_EQ(back.yield(), tree.yield());
  EXPECT_EQ(nlohmann::json(back), j);
  EXPECT_EQ(replay(cnf, back), W("(()())"));
}

TEST(ShortestYields, PicksShortestWithDeclarationOrderTies) {
  auto g = G("S -> a S b | c | d\nT -> e e | f f");
  auto y = shortest_yields(g);
  EXPECT_EQ(y.at("S"), W("c"));
  EXPECT_EQ(y.at("T"), W("ee"));
  auto two = shortest_yields(bundled("two_linear"));
  EXPECT_EQ(two.at("S"), W("abab"));
}

TEST(SententialReach, FindsThreeInfiniteNonterminals) {
  auto g = G("S -> A S | A\nA -> a A | a");
  auto form = sentential_reach(g, 3);
  ASSERT_TRUE(form);
  auto infinite = infinite_nonterminals(g);
  std::size_t count = 0;
  for (const auto& s : *form) count += s.is_nonterminal() && infinite.count(s.name);
  EXPECT_GE(count, 3u);
}

TEST(SententialReach, LinearGrammarNeverHasTwo) {
  EXPECT_FALSE(sentential_reach(bundled("even"), 2, 20));
  EXPECT_TRUE(sentential_reach(bundled("two_linear"), 2));
  EXPECT_FALSE(sentential_reach(bundled("two_linear"), 3, 20));
}

TEST(ShortestWordAtLeast, Examples) {
  auto cnf = to_cnf(bundled("k21"));
  EXPECT_EQ(shortest_word_at_least(cnf, 4), std::optional<Word>(W("aabbb")));
  EXPECT_EQ(shortest_word_at_least(cnf, 0), std::optional<Word>(W("ab")));
  EXPECT_FALSE(shortest_word_at_least(to_cnf(G("S -> a b | c")), 3));
}

TEST(DefaultCap, ReadsEnvironment) {
  ::setenv("PUMPLAB_MAXLEN_CAP", "20", 1);
  EXPECT_EQ(default_enumeration_cap(), 20u);
  ::unsetenv("PUMPLAB_MAXLEN_CAP");
  EXPECT_EQ(default_enumeration_cap(), 16u);
}

}  // namespace
}  // namespace pumplab
