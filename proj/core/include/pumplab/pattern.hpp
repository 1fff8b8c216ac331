#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pumplab/word.hpp"

namespace pumplab {

/// A small regular expression over single-character literals: concatenation,
/// grouping with (), alternation with |, and Kleene star. Whitespace is
/// ignored. Compiled to a Thompson NFA.
class Pattern {
 public:
  /// Throws Error(MalformedPattern).
  explicit Pattern(std::string_view text);

  bool matches(const Word& word) const;
  std::set<Word> enumerate(std::size_t max_len) const;

  const std::string& text() const { return text_; }
  const std::set<std::string>& alphabet() const { return alphabet_; }

 private:
  struct Node {
    std::vector<int> eps;
    char symbol = 0;
    int target = -1;  // symbol edge, -1 when absent
  };
  using States = std::vector<char>;

  int add_node();
  States closure(States set) const;
  States step(const States& set, char c) const;
  bool accepting(const States& set) const { return set[static_cast<std::size_t>(accept_)] != 0; }

  friend class PatternParser;

  std::string text_;
  std::set<std::string> alphabet_;
  std::vector<Node> nodes_;
  int start_ = 0;
  int accept_ = 0;
};

}  // namespace pumplab
