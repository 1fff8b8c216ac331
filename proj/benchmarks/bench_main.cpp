#include <benchmark/benchmark.h>

#include "pumplab/derive.hpp"
#include "pumplab/family.hpp"
#include "pumplab/grammar_text.hpp"
#include "pumplab/normal_forms.hpp"
#include "pumplab/oracles.hpp"
#include "pumplab/pump_check.hpp"
#include "pumplab/pump_extract.hpp"

namespace {

using namespace pumplab;

Grammar bundled(const char* name) {
  return load_grammar(std::string(PUMPLAB_GRAMMAR_DIR) + "/" + name + ".cfg");
}

Word nested(std::size_t depth) {
  Word w = repeat({"("}, depth);
  append(w, {")"}, depth);
  return w;
}

void BM_CykDyck(benchmark::State& state) {
  CykParser parser(to_cnf(bundled("dyck")));
  const auto len = static_cast<std::size_t>(state.range(0));
  Word w = repeat(parse_word("(())"), len / 4);
  for (auto _ : state) benchmark::DoNotOptimize(parser.accepts(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CykDyck)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_ParseLinear(benchmark::State& state) {
  auto g = bundled("palindrome");
  const auto len = static_cast<std::size_t>(state.range(0));
  Word w = repeat({"a"}, len / 2);
  append(w, {"b"});
  append(w, {"a"}, len / 2);
  for (auto _ : state) benchmark::DoNotOptimize(parse_linear(g, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParseLinear)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_ExtractThm1(benchmark::State& state) {
  auto g = bundled("k21");
  const auto m = static_cast<std::size_t>(state.range(0));
  Word w = repeat({"a"}, m + 1);
  append(w, {"b"}, 2 * m + 1);
  for (auto _ : state) benchmark::DoNotOptimize(extract_thm1(g, w));
}
BENCHMARK(BM_ExtractThm1)->Range(8, 256);

void BM_RefuteBarHillel(benchmark::State& state) {
  auto oracle = builtin_oracle("anbncn");
  auto family = WitnessFamily::parse("a^n b^n c^n");
  PumpSpec spec{Lemma::BarHillel, {}, 2, 1, 2};
  const auto nmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(refute(oracle, spec, family, nmax));
}
BENCHMARK(BM_RefuteBarHillel)->DenseRange(2, 8, 2);

void BM_RefuteDyckThm2(benchmark::State& state) {
  auto oracle = builtin_oracle("dyck");
  auto family = WitnessFamily::parse("(^(2n) )^(2n) (^(2n) )^(2n)");
  PumpSpec spec{Lemma::Thm2, Ratio(1, 1), 2, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(refute(oracle, spec, family, 4));
}
BENCHMARK(BM_RefuteDyckThm2);

void BM_CnfTransform(benchmark::State& state) {
  auto g = bundled("three_linear");
  for (auto _ : state) benchmark::DoNotOptimize(to_cnf(g));
}
BENCHMARK(BM_CnfTransform);

void BM_GrammarOracleDeepNesting(benchmark::State& state) {
  auto oracle = oracle_from_grammar(bundled("dyck"));
  Word w = nested(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.member(w));
}
BENCHMARK(BM_GrammarOracleDeepNesting)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
