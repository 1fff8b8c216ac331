#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pumplab/word.hpp"

namespace pumplab {

/// a*n + b
struct Affine {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t at(std::uint64_t n) const { return a * n + b; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// Parses an affine expression in n built from numbers, n, +, * and
/// parentheses ("2*n", "3(n+2)", "n+1"). A product of two n terms is
/// rejected. Throws Error(MalformedPattern).
Affine parse_affine(std::string_view text);

struct Segment {
  Word block;
  Affine exponent;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A word p_n for every n, used to refute a lemma at each candidate constant.
class WitnessFamily {
 public:
  /// Template of segments lit^(expr): lit is one character or a {braced}
  /// group, expr is affine in n, and a literal without ^ occurs once.
  /// Whitespace is ignored: "(^(2*n) )^(2*n)". Throws Error(MalformedPattern),
  /// also when no exponent depends on n.
  static WitnessFamily parse(std::string_view text);

  /// Families no affine template can express, e.g. "evenlin-square" for
  /// a^2 b a^((2n+5)^2) b^3. Throws Error(Usage) for unknown names.
  static WitnessFamily named(std::string_view name);
  static std::vector<std::string> named_families();

  Word instantiate(std::uint64_t n) const;
  const std::string& description() const { return description_; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::string description_;
  std::vector<Segment> segments_;
  std::function<Word(std::uint64_t)> fn_;
};

}  // namespace pumplab
