#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pumplab/grammar.hpp"
#include "pumplab/word.hpp"

namespace pumplab {

/// A membership predicate standing in for a language. member must be pure
/// and total: words with foreign symbols are simply rejected.
struct LanguageOracle {
  std::string id;
  std::function<bool(const Word&)> member;
  std::function<std::set<Word>(std::size_t)> enumerator;  // all members up to a length
  std::set<std::string> alphabet;
};

/// The infinite index set H of L_H and L_2.
enum class HSet { Squares, PowersOfTwo };

bool in_h(HSet h, std::uint64_t value);
bool is_prime(std::uint64_t value);
bool is_square(std::uint64_t value);

/// Builtins by name:
///   anbn, anbncn, abcd, dyck, palindrome, linpair, primesquare, l1,
///   lh:squares, lh:powers-of-two, l2:squares, l2:powers-of-two, zeroone
/// Throws Error(UnknownOracle).
LanguageOracle builtin_oracle(std::string_view name);

/// CYK on the CNF image, memoized behind a mutex; enumerator = enumerate().
/// An empty-language grammar gives an oracle that rejects everything.
LanguageOracle oracle_from_grammar(const Grammar& g, std::string id = "grammar");

/// Throws Error(MalformedPattern).
LanguageOracle oracle_from_pattern(std::string_view pattern);

/// Resolves a command-line spec: a builtin name, "pattern:REGEX" or
/// "grammar:PATH".
LanguageOracle make_oracle(std::string_view spec);

std::vector<std::string> builtin_oracle_names();

}  // namespace pumplab
