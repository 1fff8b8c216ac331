#include <gtest/gtest.h>

#include "pumplab/error.hpp"
#include "pumplab/oracles.hpp"
#include "pumplab/pattern.hpp"
#include "test_support.hpp"

namespace pumplab {
namespace {

using testing::all_words;
using testing::W;

std::vector<std::string> letters(const LanguageOracle& o) {
  return {o.alphabet.begin(), o.alphabet.end()};
}

// The enumerator and the predicate must describe the same language.
TEST(Builtins, EnumeratorMatchesMembership) {
  for (const auto& name : builtin_oracle_names()) {
    auto o = builtin_oracle(name);
    std::size_t len = o.alphabet.size() <= 2 ? 12 : o.alphabet.size() == 3 ? 9 : 7;
    std::set<Word> want;
    for (const auto& w : all_words(letters(o), len))
      if (o.member(w)) want.insert(w);
    EXPECT_EQ(o.enumerator(len), want) << name;
  }
}

// Longer words for the builtins whose short slices say little.
TEST(Builtins, EnumeratorSamplesAreMembers) {
  for (const auto& name : {"primesquare", "zeroone", "l2:squares", "lh:powers-of-two"}) {
    auto o = builtin_oracle(name);
    auto words = o.enumerator(22);
    EXPECT_FALSE(words.empty()) << name;
    for (const auto& w : words) EXPECT_TRUE(o.member(w)) << name << " " << format_word(w);
  }
}

TEST(Builtins, Examples) {
  EXPECT_TRUE(builtin_oracle("anbncn").member(W("aabbcc")));
  EXPECT_FALSE(builtin_oracle("anbncn").member(W("aabbc")));
  EXPECT_TRUE(builtin_oracle("abcd").member(W("abccdd")));
  EXPECT_FALSE(builtin_oracle("abcd").member(W("abcdd")));
  EXPECT_TRUE(builtin_oracle("dyck").member(W("(()())")));
  EXPECT_FALSE(builtin_oracle("dyck").member(W("())(")));
  EXPECT_TRUE(builtin_oracle("palindrome").member(W("abbba")));
  EXPECT_TRUE(builtin_oracle("linpair").member(W("aacbbbb")));
  EXPECT_FALSE(builtin_oracle("linpair").member(W("aacbbb")));
  // a^r b a^q b^m with r, m >= 2 and q >= 2 a square
  EXPECT_TRUE(builtin_oracle("primesquare").member(W("aabaaaabb")));
  EXPECT_FALSE(builtin_oracle("primesquare").member(W("aabaaabb")));
  EXPECT_TRUE(builtin_oracle("l1").member(W("abaabbab")));
  EXPECT_FALSE(builtin_oracle("l1").member(W("abababab")));
  EXPECT_TRUE(builtin_oracle("lh:squares").member(W("abaaabbb")));      // 1 is a square
  EXPECT_FALSE(builtin_oracle("lh:squares").member(W("aabbaaabbb")));   // 2, 3
  EXPECT_TRUE(builtin_oracle("lh:squares").member(W("aaabbb")));
  EXPECT_TRUE(builtin_oracle("l2:powers-of-two").member(W("aaabbbaaabbbaabb")));
  EXPECT_FALSE(builtin_oracle("l2:powers-of-two").member(W("aaabbbaaabbbaaabbb")));
  // 0^j 1^m 0^r 1^i 0^l 1^i 0^r 1^m 0^j, r prime
  EXPECT_TRUE(builtin_oracle("zeroone").member(W("01001010010")));
  EXPECT_FALSE(builtin_oracle("zeroone").member(W("010101010")));
}

TEST(Builtins, ForeignSymbolsAreRejected) {
  for (const auto& name : builtin_oracle_names()) {
    EXPECT_FALSE(builtin_oracle(name).member(W("z"))) << name;
  }
}

TEST(Builtins, UnknownNames) {
  try {
    builtin_oracle("anbm");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownOracle);
  }
  EXPECT_THROW(builtin_oracle("lh:cubes"), Error);
  EXPECT_THROW(builtin_oracle("anbn:squares"), Error);
}

TEST(Arithmetic, PrimesAgreeWithSieve) {
  constexpr std::size_t limit = 1000000;
  std::vector<bool> composite(limit + 1, false);
  composite[0] = composite[1] = true;
  for (std::size_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  for (std::size_t i = 0; i <= limit; ++i) ASSERT_EQ(is_prime(i), !composite[i]) << i;
  EXPECT_TRUE(is_prime(1000000007ULL));
  EXPECT_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST(Arithmetic, SquaresAndPowers) {
  std::set<std::uint64_t> squares, powers;
  for (std::uint64_t i = 0; i * i <= 100000; ++i) squares.insert(i * i);
  for (std::uint64_t p = 1; p <= 100000; p *= 2) powers.insert(p);
  for (std::uint64_t v = 0; v <= 100000; ++v) {
    ASSERT_EQ(is_square(v), squares.count(v) > 0) << v;
    ASSERT_EQ(in_h(HSet::PowersOfTwo, v), powers.count(v) > 0) << v;
  }
  EXPECT_TRUE(is_square(4294967296ULL));
  EXPECT_FALSE(is_square(4294967295ULL));
}

TEST(GrammarOracle, MatchesBuiltins) {
  auto grammar = oracle_from_grammar(testing::bundled("dyck"));
  auto builtin = builtin_oracle("dyck");
  for (const auto& w : all_words({"(", ")"}, 12)) EXPECT_EQ(grammar.member(w), builtin.member(w));
  auto pal = oracle_from_grammar(testing::bundled("palindrome"));
  for (const auto& w : all_words({"a", "b"}, 10))
    EXPECT_EQ(pal.member(w), builtin_oracle("palindrome").member(w)) << format_word(w);
  EXPECT_FALSE(grammar.member(W("a")));
}

TEST(GrammarOracle, EmptyLanguage) {
  auto o = oracle_from_grammar(testing::G("S -> a S"));
  EXPECT_FALSE(o.member(W("a")));
  EXPECT_FALSE(o.member(W("")));
}

TEST(Pattern, Matching) {
  Pattern p("(ab)*c | a*");
  EXPECT_TRUE(p.matches(W("ababc")));
  EXPECT_TRUE(p.matches(W("c")));
  EXPECT_TRUE(p.matches(W("")));
  EXPECT_TRUE(p.matches(W("aaa")));
  EXPECT_FALSE(p.matches(W("abab")));
  EXPECT_FALSE(p.matches(W("id")));
  EXPECT_EQ(p.alphabet(), (std::set<std::string>{"a", "b", "c"}));
}

TEST(Pattern, EnumerateMatchesPredicate) {
  Pattern p("a(b|c)*a|b*");
  std::set<Word> want;
  for (const auto& w : all_words({"a", "b", "c"}, 6))
    if (p.matches(w)) want.insert(w);
  EXPECT_EQ(p.enumerate(6), want);
}

TEST(Pattern, Malformed) {
  for (const char* bad : {"(ab", "ab)", "*a"}) {
    try {
      Pattern p(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedPattern) << bad;
    }
  }
}

TEST(MakeOracle, Specs) {
  EXPECT_TRUE(make_oracle("pattern:(ab)*").member(W("abab")));
  auto g = make_oracle(std::string("grammar:") + PUMPLAB_GRAMMAR_DIR + "/anbn.cfg");
  EXPECT_TRUE(g.member(W("aabb")));
  EXPECT_FALSE(g.member(W("aab")));
  EXPECT_EQ(make_oracle("dyck").id, "dyck");
  EXPECT_THROW(make_oracle("nope"), Error);
}

}  // namespace
}  // namespace pumplab
