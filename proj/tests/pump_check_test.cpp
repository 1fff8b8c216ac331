#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "pumplab/error.hpp"
#include "pumplab/family.hpp"
#include "pumplab/oracles.hpp"
#include "pumplab/pump_check.hpp"
#include "test_support.hpp"

namespace pumplab {
namespace {

using testing::uniform;
using testing::W;

Factorization F(Lemma lemma, const char* u, const char* v, const char* w, const char* x,
                const char* y, std::optional<Ratio> k = {}, std::size_t n = 1) {
  return Factorization{lemma, W(u), W(v), W(w), W(x), W(y), k, n};
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Pump, Identity) {
  auto f = F(Lemma::BarHillel, "u", "ab", "w", "c", "y");
  EXPECT_EQ(pump(f, 1), f.word());
  EXPECT_EQ(pump(f, 0), W("uwy"));
  EXPECT_EQ(pump(f, 3), W("uabababwcccy"));
  MultiFactorization m{Lemma::Multilinear, W("u"), {Block{W("a"), W(""), W("b"), W("")},
                                                     Block{W("c"), W("d"), W(""), W("e")}}};
  EXPECT_EQ(pump(m, {1, 1}), m.word());
  EXPECT_EQ(pump(m, {0, 2}), W("uccde"));
  EXPECT_THROW(pump(m, {1}), Error);
}

TEST(Validity, Thm1WithHalfRatio) {
  PumpSpec spec{Lemma::Thm1, Ratio(1, 2), 2, 9};
  // n = 9, g + h = 3: |u|, |v| <= 6 and |x|, |y| <= 3
  EXPECT_TRUE(valid_factorization(F(Lemma::Thm1, "aa", "abbaab", "c", "bbb", "b", Ratio(1, 2), 9), spec));
  auto r = valid_factorization(F(Lemma::Thm1, "", "aa", "c", "b", "", Ratio(1, 2), 9), spec);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.violated, "0 < |u|");
  r = valid_factorization(F(Lemma::Thm1, "aa", "aaaaaaaa", "c", "bbbb", "b", Ratio(1, 2), 9), spec);
  EXPECT_EQ(r.violated, "|v|(g+h) <= nh");
  r = valid_factorization(F(Lemma::Thm1, "aa", "aa", "c", "bb", "b", Ratio(1, 2), 9), spec);
  EXPECT_EQ(r.violated, "h|x| = g|v|");
}

TEST(Validity, Thm2NeedsNonemptyBoundedW) {
  PumpSpec spec{Lemma::Thm2, Ratio(1, 1), 2, 4};
  EXPECT_TRUE(valid_factorization(F(Lemma::Thm2, "aa", "a", "ab", "b", "bb", Ratio(1, 1), 4), spec));
  EXPECT_TRUE(valid_factorization(F(Lemma::Thm2, "", "a", "ab", "b", "", Ratio(1, 1), 4), spec));
  EXPECT_EQ(valid_factorization(F(Lemma::Thm2, "aa", "a", "", "b", "bb", Ratio(1, 1), 4), spec).violated,
            "0 < |w|");
  EXPECT_EQ(valid_factorization(F(Lemma::Thm2, "a", "a", "aabbb", "b", "b", Ratio(1, 1), 4), spec).violated,
            "|w| <= n");
}

TEST(Validity, RegularRatioWaivesXY) {
  PumpSpec spec{Lemma::Thm1, Ratio(0, 1), 2, 3};
  EXPECT_TRUE(valid_factorization(F(Lemma::Thm1, "a", "b", "ab", "", "", Ratio(0, 1), 3), spec));
}

TEST(Validity, ClassicLemmas) {
  PumpSpec bh{Lemma::BarHillel, {}, 2, 3};
  EXPECT_TRUE(valid_factorization(F(Lemma::BarHillel, "aaa", "a", "b", "b", "bbb"), bh));
  EXPECT_EQ(valid_factorization(F(Lemma::BarHillel, "a", "a", "bb", "b", "b"), bh).violated, "|vwx| <= n");
  EXPECT_EQ(valid_factorization(F(Lemma::BarHillel, "a", "", "b", "", "b"), bh).violated, "0 < |vx|");
  PumpSpec lin{Lemma::Linear, {}, 2, 3};
  EXPECT_TRUE(valid_factorization(F(Lemma::Linear, "a", "a", "aaabbb", "", "b"), lin));
  EXPECT_EQ(valid_factorization(F(Lemma::Linear, "a", "a", "aabb", "b", "b"), lin).violated, "|uvxy| <= n");
  PumpSpec reg{Lemma::Regular, {}, 2, 2};
  EXPECT_TRUE(valid_factorization(F(Lemma::Regular, "a", "b", "abab", "", ""), reg));
  EXPECT_EQ(valid_factorization(F(Lemma::Regular, "a", "b", "aba", "b", ""), reg).violated, "x = y = λ");
  EXPECT_EQ(valid_factorization(F(Lemma::Regular, "ab", "a", "b", "", ""), reg).violated, "|uv| <= n");
}

TEST(Validity, LemmaMismatch) {
  PumpSpec spec{Lemma::BarHillel, {}, 2, 3};
  EXPECT_THROW(valid_factorization(F(Lemma::Linear, "", "a", "", "", ""), spec), Error);
  PumpSpec no_ratio;
  no_ratio.lemma = Lemma::Thm1;
  EXPECT_THROW(no_ratio.check(), Error);
}

// Same conditions written as plain fractions, k = g/h: each part is compared
// against n/(k+1) or nk/(k+1), and the ratios as |x| = k|v|, |y| = k|u|.
struct Frac {
  std::uint64_t p, q;
  bool operator<=(const Frac& o) const { return p * o.q <= o.p * q; }
  bool operator==(const Frac& o) const { return p * o.q == o.p * q; }
};

bool hand_valid(const Factorization& f, Lemma lemma, Ratio k, std::uint64_t n) {
  const Frac kk{k.num(), k.den()};
  const Frac small{n * kk.q, kk.p + kk.q};       // n/(k+1)
  const Frac large{n * kk.p, kk.p + kk.q};       // nk/(k+1)
  auto sz = [](const Word& w) { return Frac{w.size(), 1}; };
  bool first = lemma == Lemma::Thm1;
  bool ok = !f.v.empty() && sz(f.v) <= small && sz(f.x) == Frac{f.v.size() * kk.p, kk.q} &&
            sz(f.y) == Frac{f.u.size() * kk.p, kk.q};
  if (kk.p > 0) ok = ok && !f.x.empty() && sz(f.x) <= large;
  if (first) {
    ok = ok && !f.u.empty() && sz(f.u) <= small;
    if (kk.p > 0) ok = ok && !f.y.empty() && sz(f.y) <= large;
  } else {
    ok = ok && !f.w.empty() && f.w.size() <= n;
  }
  return ok;
}

TEST(Validity, AgreesWithFractionArithmetic) {
  const std::vector<Ratio> ratios{Ratio(0, 1), Ratio(1, 1), Ratio(1, 2), Ratio(2, 1), Ratio(2, 3)};
  std::size_t accepted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    Ratio k = ratios[uniform(0, ratios.size() - 1)];
    Lemma lemma = uniform(0, 1) ? Lemma::Thm1 : Lemma::Thm2;
    std::size_t n = uniform(1, 12);
    auto part = [](std::size_t len) { return Word(len, "a"); };
    Factorization f{lemma, part(uniform(0, 5)), part(uniform(0, 5)), part(uniform(0, 5)),
                    part(uniform(0, 6)), part(uniform(0, 6)), k, n};
    bool got = valid_factorization(f, PumpSpec{lemma, k, 2, n}).ok;
    ASSERT_EQ(got, hand_valid(f, lemma, k, n))
        << lemma_name(lemma) << " k=" << k.str() << " n=" << n << " |u|=" << f.u.size()
        << " |v|=" << f.v.size() << " |w|=" << f.w.size() << " |x|=" << f.x.size()
        << " |y|=" << f.y.size();
    accepted += got;
  }
  EXPECT_GT(accepted, 50u);
}

TEST(ValidSplits, BarHillelCountIsComplete) {
  for (std::size_t L = 0; L <= 7; ++L) {
    Word p(L, "a");
    auto splits = valid_splits(p, PumpSpec{Lemma::BarHillel, {}, 2, L + 1});
    EXPECT_EQ(splits.size(), binom(L + 4, 4) - binom(L + 2, 2)) << L;
  }
}

TEST(ValidSplits, RegularCountIsComplete) {
  for (std::size_t L = 0; L <= 9; ++L) {
    auto splits = valid_splits(Word(L, "a"), PumpSpec{Lemma::Regular, {}, 2, L + 1});
    EXPECT_EQ(splits.size(), binom(L + 1, 2)) << L;
  }
}

TEST(ValidSplits, RatioLoopsMissNothing) {
  // Brute force over all cut points against the shaped loops.
  for (auto k : {Ratio(1, 1), Ratio(1, 2), Ratio(2, 1), Ratio(0, 1)}) {
    for (auto lemma : {Lemma::Thm1, Lemma::Thm2, Lemma::Linear}) {
      Word p = W("abaabbabab");
      PumpSpec spec{lemma, lemma == Lemma::Linear ? std::nullopt : std::optional<Ratio>(k), 2, 6};
      std::vector<Split> brute;
      const std::size_t L = p.size();
      for (std::size_t a = 0; a <= L; ++a)
        for (std::size_t b = a; b <= L; ++b)
          for (std::size_t c = b; c <= L; ++c)
            for (std::size_t d = c; d <= L; ++d)
              if (valid_factorization(factorization_at(p, {a, b, c, d}, spec), spec))
                brute.push_back({a, b, c, d});
      EXPECT_EQ(valid_splits(p, spec), brute) << lemma_name(lemma) << " " << k.str();
    }
  }
}

TEST(FirstFailing, Memoizes) {
  auto oracle = builtin_oracle("anbn");
  MemoOracle member(oracle);
  auto good = F(Lemma::BarHillel, "a", "a", "", "b", "b");
  EXPECT_EQ(first_failing_exponent(good, member, 4), std::nullopt);
  auto bad = F(Lemma::BarHillel, "a", "a", "b", "", "b");
  EXPECT_EQ(first_failing_exponent(bad, member, 4), std::optional<std::size_t>(0));
  std::size_t before = member.distinct_queries();
  first_failing_exponent(good, member, 4);
  EXPECT_EQ(member.distinct_queries(), before);
}

TEST(Refute, AnbncnIsNotContextFree) {
  auto report = refute(builtin_oracle("anbncn"), PumpSpec{Lemma::BarHillel, {}, 2, 1, 2},
                       WitnessFamily::parse("a^n b^n c^n"), 4);
  EXPECT_EQ(report.verdict, Verdict::RefutedUpTo);
  EXPECT_EQ(report.n_lo, 1u);
  EXPECT_EQ(report.n_hi, 4u);
  ASSERT_EQ(report.words.size(), 4u);
  for (const auto& w : report.words) {
    EXPECT_FALSE(w.survived());
    EXPECT_EQ(w.failures.size(), w.tried);
    for (const auto& f : w.failures) EXPECT_FALSE(builtin_oracle("anbncn").member(f.pumped));
  }
}

TEST(Refute, SurvivorMeansInconclusive) {
  auto report = refute(builtin_oracle("anbn"), PumpSpec{Lemma::BarHillel, {}, 2, 1, 3},
                       WitnessFamily::parse("a^n b^n"), 4);
  EXPECT_EQ(report.verdict, Verdict::Inconclusive);
  // ab has no room for |vwx| <= 1; from aabb on, a^n b^n keeps a survivor.
  EXPECT_FALSE(report.words[0].survived());
  for (std::size_t i = 1; i < report.words.size(); ++i) EXPECT_TRUE(report.words[i].survived());
}

TEST(Refute, UnusableFamily) {
  try {
    refute(builtin_oracle("anbn"), PumpSpec{Lemma::BarHillel, {}, 2, 1, 3},
           WitnessFamily::parse("a^n b^(n+1)"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FamilyUnusable);
  }
}

TEST(CheckSatisfaction, Verdicts) {
  auto anbn = builtin_oracle("anbn");
  auto sat = check_satisfaction(anbn, PumpSpec{Lemma::BarHillel, {}, 2, 4, 4}, 10);
  EXPECT_EQ(sat.verdict, Verdict::SatisfiedEvidence);
  EXPECT_EQ(sat.words.size(), 4u);  // aabb .. a^5 b^5
  auto lin = check_satisfaction(anbn, PumpSpec{Lemma::Regular, {}, 2, 4, 4}, 10);
  EXPECT_EQ(lin.verdict, Verdict::RefutedUpTo);
  auto none = check_satisfaction(anbn, PumpSpec{Lemma::BarHillel, {}, 2, 11, 4}, 10);
  EXPECT_EQ(none.verdict, Verdict::Inconclusive);
}

TEST(RefuteMultilinear, BlocksMustFitThePairs) {
  auto two = oracle_from_grammar(testing::bundled("two_linear"));
  // Pumping down to exponent 0 needs at least two letters per pair.
  std::vector<Word> witnesses{W("aabbaabb"), W("aabbaaabbb")};
  for (const auto& w : witnesses) ASSERT_TRUE(two.member(w)) << format_word(w);
  auto ok = refute_multilinear(two, 1, witnesses, 3, 8);
  EXPECT_EQ(ok.verdict, Verdict::SatisfiedEvidence);
  for (const auto& a : ok.words) {
    ASSERT_TRUE(a.multi_survivor);
    EXPECT_EQ(a.multi_survivor->word(), a.word);
    EXPECT_EQ(a.multi_survivor->blocks.size(), 2u);
  }
  auto bad = refute_multilinear(two, 2, witnesses, 3, 8);
  EXPECT_EQ(bad.verdict, Verdict::RefutedUpTo);
  EXPECT_NE(bad.note.find("not a proof"), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  auto report = refute(builtin_oracle("anbncn"), PumpSpec{Lemma::BarHillel, {}, 2, 1, 2},
                       WitnessFamily::parse("a^n b^n c^n"), 2);
  nlohmann::json j = report;
  EXPECT_EQ(j.at("verdict"), "refuted-up-to");
  EXPECT_EQ(j.at("nRange"), nlohmann::json::array({1, 2}));
  EXPECT_TRUE(j.at("k").is_null());
  EXPECT_EQ(j.get<LemmaReport>(), report);

  auto multi = refute_multilinear(oracle_from_grammar(testing::bundled("two_linear")), 1, {W("aabbaabb")}, 3, 4);
  nlohmann::json m = multi;
  EXPECT_EQ(m.at("blocks"), 2);
  EXPECT_EQ(m.get<LemmaReport>(), multi);
}

TEST(Verdict, Names) {
  for (auto v : {Verdict::SatisfiedEvidence, Verdict::RefutedUpTo, Verdict::Inconclusive}) {
    EXPECT_EQ(parse_verdict(verdict_name(v)), v);
  }
  EXPECT_THROW(parse_verdict("maybe"), Error);
}

}  // namespace
}  // namespace pumplab
