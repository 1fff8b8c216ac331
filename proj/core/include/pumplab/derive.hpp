#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pumplab/grammar.hpp"
#include "pumplab/word.hpp"

namespace pumplab {

/// Upper bound on enumerate()'s max_len: PUMPLAB_MAXLEN_CAP when set, else 16.
std::size_t default_enumeration_cap();

/// All words of L(g) with at most max_len tokens. Throws Error(CapExceeded)
/// when max_len is above the cap.
std::set<Word> enumerate(const Grammar& g, std::size_t max_len);
std::set<Word> enumerate(const Grammar& g, std::size_t max_len, std::size_t cap);

struct TraceStep {
  std::size_t rule;
  Word prefix;
  std::string nonterminal;  // produced by this step's rule
  Word suffix;
};

struct TraceTail {
  std::size_t rule;
  Word word;
};

/// The single main branch of a linear derivation: each step emits a prefix
/// and a suffix around the next nonterminal, and the tail closes it.
struct LinearTrace {
  std::string start;
  std::vector<TraceStep> steps;
  TraceTail tail;

  Word yield() const;

  /// start, then the nonterminal of every step: the nonterminal of sentential
  /// form i for i = 0..steps.size().
  std::vector<std::string> nonterminals() const;
};

/// Throws Error(NotInClass) for non-linear grammars.
std::optional<LinearTrace> parse_linear(const Grammar& g, const Word& word);

/// Re-derives the word from the trace, checking every rule application.
/// Throws Error(InvalidGrammar) on an inconsistent trace.
Word replay(const Grammar& g, const LinearTrace& trace);

struct DerivationTree {
  std::string symbol;
  std::optional<std::size_t> rule;  // empty for terminal leaves
  std::vector<DerivationTree> children;

  Word yield() const;
  /// Nonterminal nodes on the longest root-to-leaf path.
  std::size_t height() const;
};

Word replay(const Grammar& g, const DerivationTree& tree);

void to_json(nlohmann::json& j, const DerivationTree& tree);
void from_json(const nlohmann::json& j, DerivationTree& tree);

/// CYK over a grammar in Chomsky normal form. Construction indexes the rules
/// once so the parser can be reused across many words.
class CykParser {
 public:
  explicit CykParser(Grammar cnf);

  bool accepts(const Word& word) const;
  std::optional<DerivationTree> parse(const Word& word) const;
  const Grammar& grammar() const { return g_; }

 private:
  struct Binary {
    std::size_t rule;
    std::uint32_t lhs, left, right;
  };
  struct Unary {
    std::size_t rule;
    std::uint32_t lhs;
  };
  class Table;

  Table fill(const Word& word) const;
  DerivationTree build(const Table& t, const Word& word, std::uint32_t a, std::size_t begin,
                       std::size_t len) const;

  Grammar g_;
  std::vector<std::string> names_;
  std::uint32_t start_ = 0;
  std::optional<std::size_t> start_lambda_;
  std::map<std::string, std::vector<Unary>> by_terminal_;
  std::vector<std::vector<Binary>> by_left_;
  std::vector<Binary> binaries_;
};

/// Throws Error(NotInClass) when g is not in Chomsky normal form.
std::optional<DerivationTree> parse_cyk(const Grammar& g, const Word& word);

/// Breadth-first search over leftmost derivations for a sentential form with
/// at least target_infinite occurrences of infinite-language nonterminals.
/// Expects a trimmed grammar. Returns nothing if none is found within
/// max_steps; that is inconclusive, not a proof of absence.
std::optional<std::vector<Symbol>> sentential_reach(const Grammar& g, std::size_t target_infinite,
                                                    std::size_t max_steps = 50);

/// Shortest terminal word of each productive nonterminal; ties resolved by
/// rule declaration order.
std::map<std::string, Word> shortest_yields(const Grammar& g);

/// The shortest word of L(cnf) with at least min_len tokens, if any exists
/// below an internal length limit.
std::optional<Word> shortest_word_at_least(const Grammar& cnf, std::size_t min_len);

}  // namespace pumplab
