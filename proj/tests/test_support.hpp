#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pumplab/grammar.hpp"
#include "pumplab/grammar_text.hpp"
#include "pumplab/word.hpp"

namespace pumplab::testing {

inline Word W(const std::string& s) { return parse_word(s); }

inline Grammar G(const std::string& text) { return parse_grammar(text); }

inline Grammar bundled(const std::string& name) {
  return load_grammar(std::string(PUMPLAB_GRAMMAR_DIR) + "/" + name + ".cfg");
}

inline const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names{
      "regular", "even",   "anbn",       "palindrome", "k21",  "k12",
      "linear",  "leftright", "two_linear", "three_linear", "dyck"};
  return names;
}

/// All words over the alphabet with length <= max_len.
inline std::vector<Word> all_words(const std::vector<std::string>& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  for (std::size_t begin = 0; begin < out.size(); ++begin) {
    if (out[begin].size() == max_len) continue;
    for (const auto& a : alphabet) {
      Word w = out[begin];
      w.push_back(a);
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// Reference language enumerator, independent of the library: breadth-first
/// search over leftmost sentential forms. Forms carrying more than max_len
/// terminals are dropped, and so are forms longer than 2*max_len + 4 symbols
/// (enough for the grammars under test, whose nullable nonterminals never
/// pile up beyond that).
inline std::set<Word> reference_language(const Grammar& g, std::size_t max_len) {
  std::set<Word> out;
  std::set<std::vector<Symbol>> seen;
  std::deque<std::vector<Symbol>> queue{{Symbol::nonterminal(g.start)}};
  while (!queue.empty()) {
    auto form = std::move(queue.front());
    queue.pop_front();
    std::size_t pos = 0, terminals = 0;
    while (pos < form.size() && form[pos].is_terminal()) ++pos;
    for (const auto& s : form) terminals += s.is_terminal() ? 1 : 0;
    if (terminals > max_len || form.size() > 2 * max_len + 4) continue;
    if (pos == form.size()) {
      Word w;
      for (const auto& s : form) w.push_back(s.name);
      out.insert(w);
      continue;
    }
    for (const auto& r : g.rules) {
      if (r.lhs != form[pos].name) continue;
      std::vector<Symbol> next(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), r.rhs.begin(), r.rhs.end());
      next.insert(next.end(), form.begin() + static_cast<std::ptrdiff_t>(pos) + 1, form.end());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

/// A random linear grammar over {a, b} with nonterminals S, A, B. Every
/// nonterminal gets a terminal rule so the language is never empty.
inline Grammar random_linear_grammar() {
  Grammar g;
  g.nonterminals = {"S", "A", "B"};
  g.terminals = {"a", "b"};
  g.start = "S";
  auto letters = [](std::size_t n) {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(Symbol::terminal(uniform(0, 1) ? "a" : "b"));
    return out;
  };
  for (const auto& lhs : g.nonterminals) {
    g.rules.push_back(Rule{lhs, letters(uniform(0, 2))});
    for (std::size_t k = uniform(1, 2); k > 0; --k) {
      Rule r{lhs, letters(uniform(0, 2))};
      r.rhs.push_back(Symbol::nonterminal(g.nonterminals[uniform(0, 2)]));
      auto suffix = letters(uniform(0, 2));
      r.rhs.insert(r.rhs.end(), suffix.begin(), suffix.end());
      g.rules.push_back(std::move(r));
    }
  }
  return g;
}

}  // namespace pumplab::testing
