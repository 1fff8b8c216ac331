#pragma once

#include <cstddef>
#include <optional>

#include "pumplab/factorization.hpp"
#include "pumplab/grammar.hpp"
#include "pumplab/ratio.hpp"
#include "pumplab/word.hpp"

namespace pumplab {

/// The constant n a lemma's proof yields for g, which must be in the normal
/// form that proof assumes:
///   thm1, thm2   (|N|+1)(g+h)  on the k-rated normal form
///   bar-hillel   2^(|N|+1)     on CNF
///   linear       2(|N|+1)      on the linear-unit normal form
///   regular      |N|+1         on the regular normal form
/// k defaults to the ratio the grammar itself exhibits. Throws
/// Error(LemmaMismatch) when g does not have the required shape.
std::size_t lemma_constant(const Grammar& g, Lemma lemma, std::optional<Ratio> k = {});

// Each extractor throws Error(WordTooShort) when |p| < lemma_constant and
// Error(NotInLanguage) when p is not in L(g).

Factorization extract_thm1(const Grammar& g, const Word& p, std::optional<Ratio> k = {});
Factorization extract_thm2(const Grammar& g, const Word& p, std::optional<Ratio> k = {});
Factorization extract_barhillel(const Grammar& g, const Word& p);
Factorization extract_linear(const Grammar& g, const Word& p);
Factorization extract_regular(const Grammar& g, const Word& p);

/// Dispatches on lemma; multi-block lemmas are rejected with Error(Usage).
Factorization extract(const Grammar& g, const Word& p, Lemma lemma, std::optional<Ratio> k = {});

struct MultiExtraction {
  Word word;
  MultiFactorization factorization;
};

/// Builds a word of L(g) with a factorization into k+1 pumpable blocks.
/// Throws Error(Inconclusive) when no sentential form with k+1
/// infinite-language nonterminals turns up within max_steps.
MultiExtraction extract_multilinear(const Grammar& g, std::size_t k, std::size_t max_steps = 50);

}  // namespace pumplab
