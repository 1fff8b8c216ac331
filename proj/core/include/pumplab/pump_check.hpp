#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pumplab/factorization.hpp"
#include "pumplab/family.hpp"
#include "pumplab/oracles.hpp"
#include "pumplab/ratio.hpp"
#include "pumplab/word.hpp"

namespace pumplab {

struct PumpSpec {
  Lemma lemma = Lemma::BarHillel;
  std::optional<Ratio> k;     // required by thm1 and thm2
  std::size_t blocks = 2;     // multi-block lemmas only
  std::size_t n = 1;
  std::size_t imax = 4;
  std::size_t part_cap = 8;   // multi-block enumeration bound on every part

  /// Throws Error(Usage) on missing or inconsistent fields.
  void check() const;
};

struct Validity {
  bool ok = true;
  std::string violated;  // the failed condition, e.g. "0 < |u|"
  explicit operator bool() const { return ok; }
};

/// Exactly the side conditions of spec.lemma at spec.n, as integer
/// inequalities. Throws Error(LemmaMismatch) when f was made for another
/// lemma.
Validity valid_factorization(const Factorization& f, const PumpSpec& spec);
Validity valid_factorization(const MultiFactorization& f, const PumpSpec& spec);

/// Cut points (a, b, c, d): u = p[0,a) v = p[a,b) w = p[b,c) x = p[c,d) y = p[d,|p|).
using Split = std::array<std::size_t, 4>;

Factorization factorization_at(const Word& p, const Split& s, const PumpSpec& spec);

/// Every split of p accepted by valid_factorization, in lexicographic order.
/// The loops are shaped by the lemma (the ratio fixes |x| and |y| for thm1
/// and thm2), then each candidate is filtered through the predicate.
std::vector<Split> valid_splits(const Word& p, const PumpSpec& spec);

/// Memoizing wrapper; one per run so pump grids never re-ask the oracle.
class MemoOracle {
 public:
  explicit MemoOracle(const LanguageOracle& oracle) : oracle_(oracle) {}
  bool operator()(const Word& w);
  std::size_t distinct_queries() const { return memo_.size(); }

 private:
  const LanguageOracle& oracle_;
  std::unordered_map<std::string, bool> memo_;
};

/// Smallest i in 0..imax with pump(f, i) outside the language.
std::optional<std::size_t> first_failing_exponent(const Factorization& f, MemoOracle& member,
                                                  std::size_t imax);

enum class Verdict { SatisfiedEvidence, RefutedUpTo, Inconclusive };
std::string_view verdict_name(Verdict v);
Verdict parse_verdict(std::string_view name);

struct Failure {
  std::vector<std::size_t> split;      // 4 cut points, or 4 per block after |u|
  std::vector<std::size_t> exponents;  // one entry for single-block lemmas
  Word pumped;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct WordAudit {
  std::size_t n = 0;
  Word word;
  std::size_t tried = 0;
  std::optional<Factorization> survivor;
  std::optional<MultiFactorization> multi_survivor;
  std::vector<Failure> failures;

  bool survived() const { return survivor.has_value() || multi_survivor.has_value(); }
  friend bool operator==(const WordAudit&, const WordAudit&) = default;
};

struct LemmaReport {
  Verdict verdict = Verdict::Inconclusive;
  Lemma lemma = Lemma::BarHillel;
  std::optional<Ratio> k;
  std::size_t blocks = 0;  // multi-block lemmas only
  std::size_t n_lo = 0, n_hi = 0;
  std::size_t imax = 0;
  std::vector<WordAudit> words;
  std::string note;

  friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

void to_json(nlohmann::json& j, const LemmaReport& r);
void from_json(const nlohmann::json& j, LemmaReport& r);

/// Every oracle word with spec.n <= |p| <= max_len must keep one valid
/// factorization through all pumps i <= imax. Multi-block lemmas use the
/// same words as witnesses. No word long enough gives Inconclusive.
LemmaReport check_satisfaction(const LanguageOracle& oracle, const PumpSpec& spec,
                               std::size_t max_len);

/// For n = 1..nmax, tries every valid factorization of p_n. Throws
/// Error(FamilyUnusable) when p_n is shorter than n or not in the language.
LemmaReport refute(const LanguageOracle& oracle, const PumpSpec& spec, const WitnessFamily& family,
                   std::size_t nmax);

/// Looks for factorizations into k+1 blocks whose full exponent grid
/// {0..min(imax,3)}^(k+1) stays in the language. Every part is capped at
/// part_cap letters. A refutation here is finite evidence only.
LemmaReport refute_multilinear(const LanguageOracle& oracle, std::size_t k,
                               const std::vector<Word>& witnesses, std::size_t imax = 4,
                               std::size_t part_cap = 8);

}  // namespace pumplab
