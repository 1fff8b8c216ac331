#pragma once

#include <cstddef>
#include <optional>

#include "pumplab/grammar.hpp"
#include "pumplab/ratio.hpp"
#include "pumplab/word.hpp"

namespace pumplab {

enum class NormalFormKind {
  LinearUnit,  // A -> aB | Ba | a, plus start -> @eps
  KRated,      // A -> vBw with |v| = den, |w| = num; A -> u with |u| < num + den
  EvenLinear,  // KRated at 1/1: A -> aBb | a | @eps
  Regular,     // KRated at 0/1: A -> aB | @eps
  Chomsky,     // A -> BC | a, plus start -> @eps
};

/// Pure rule-level shape predicate. k is only read for KRated.
bool rule_has_shape(const Grammar& g, const Rule& rule, NormalFormKind kind, Ratio k = {});

/// Every rule has the shape, and a start lambda rule never coexists with the
/// start symbol on a right-hand side.
bool has_shape(const Grammar& g, NormalFormKind kind, Ratio k = {});

/// Chains long rules through fresh nonterminals named lhs#i. Throws
/// Error(NotInClass) when g is not k-rated for k.
Grammar to_k_rated_nf(const Grammar& g, Ratio k);

/// to_k_rated_nf at 0/1.
Grammar to_regular_nf(const Grammar& g);

/// Throws Error(NotInClass) for non-linear input.
Grammar to_linear_unit_nf(const Grammar& g);

/// START, TERM, BIN, DEL, UNIT, then trimming. Throws Error(EmptyLanguage).
Grammar to_cnf(const Grammar& g);

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<Word> witness;  // shortest word in the symmetric difference
};

/// Compares languages up to max_len, ignoring the empty word.
EquivalenceResult bounded_equivalent(const Grammar& a, const Grammar& b, std::size_t max_len = 12);

// Building blocks shared by the transformations, exposed for tests.
Grammar eliminate_unit_rules(const Grammar& g);
Grammar eliminate_lambda_rules(const Grammar& g, bool keep_start_lambda);

}  // namespace pumplab
