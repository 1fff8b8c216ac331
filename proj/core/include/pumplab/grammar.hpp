#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pumplab/ratio.hpp"
#include "pumplab/word.hpp"

namespace pumplab {

enum class SymbolKind { Terminal, Nonterminal };

struct Symbol {
  SymbolKind kind = SymbolKind::Terminal;
  std::string name;

  static Symbol terminal(std::string name) { return {SymbolKind::Terminal, std::move(name)}; }
  static Symbol nonterminal(std::string name) { return {SymbolKind::Nonterminal, std::move(name)}; }

  bool is_terminal() const noexcept { return kind == SymbolKind::Terminal; }
  bool is_nonterminal() const noexcept { return kind == SymbolKind::Nonterminal; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Context-free rule lhs -> rhs. An empty rhs is a lambda rule.
struct Rule {
  std::string lhs;
  std::vector<Symbol> rhs;

  std::size_t nonterminal_count() const;
  bool is_unit() const { return rhs.size() == 1 && rhs.front().is_nonterminal(); }

  friend bool operator==(const Rule&, const Rule&) = default;
};

std::string format_rule(const Rule& rule);

/// G = (N, V, S, H). Kept as a plain aggregate so that malformed grammars can
/// be represented and reported by validate(); every algorithm below assumes a
/// valid grammar.
struct Grammar {
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::string start;
  std::vector<Rule> rules;

  bool is_nonterminal(std::string_view name) const;
  bool is_terminal(std::string_view name) const;
  std::vector<std::size_t> rules_for(std::string_view lhs) const;

  friend bool operator==(const Grammar&, const Grammar&) = default;
};

struct Violation {
  enum class Kind {
    UndeclaredSymbol,
    BadStart,
    LhsNotNonterminal,
    OverlappingAlphabets,
    NoNonterminals,
    EmptyName,
  };
  Kind kind;
  std::string subject;
  std::optional<std::size_t> rule;

  /// e.g. "undeclared-symbol(c)"
  std::string str() const;
};

std::vector<Violation> validate(const Grammar& g);

/// Throws Error(InvalidGrammar) listing every violation.
void require_valid(const Grammar& g);

/// A rule split as prefix, optional nonterminal, suffix. For a terminal rule
/// the whole rhs is the prefix.
struct LinearShape {
  Word prefix;
  std::optional<std::string> nonterminal;
  Word suffix;
};

/// Throws Error(NotInClass) when the rhs holds two or more nonterminals.
LinearShape linear_shape(const Rule& rule);

struct RuleRatio {
  enum class Kind {
    Fixed,            // A -> vBw with |v| + |w| > 0
    Unconstrained,    // unit rule or terminal rule, compatible with every k
    LeftRegularOnly,  // |v| = 0 and |w| > 0, no finite k fits
  };
  Kind kind;
  Ratio value;  // meaningful for Fixed only

  friend bool operator==(const RuleRatio&, const RuleRatio&) = default;
};

RuleRatio ratio_of(const Rule& rule);

/// True when A -> vBw satisfies |w|*den == |v|*num. Terminal and unit rules
/// always fit.
bool fits_ratio(const Rule& rule, Ratio k);

struct ClassFlag {
  bool holds = false;
  std::optional<std::size_t> witness;  // offending rule index when !holds
};

struct ClassReport {
  ClassFlag context_free;
  ClassFlag linear;
  ClassFlag k_rated;
  ClassFlag even_linear;
  ClassFlag regular;
  ClassFlag k_linear;
  ClassFlag metalinear_shape;

  /// Detected ratio when k_rated. When no rule constrains k the grammar is
  /// k-rated for every k; ratio is then reported as 0/1 and ratio_free is set.
  std::optional<Ratio> ratio;
  bool ratio_free = false;

  /// Number of components when k_linear holds (1 for plainly linear grammars).
  std::size_t k_linear_arity = 0;
};

ClassReport classify(const Grammar& g);

/// Removes non-productive and unreachable nonterminals together with their
/// rules. Throws Error(EmptyLanguage) if the start symbol is non-productive.
Grammar useful_core(const Grammar& g);

/// Nonterminals A whose language L(G_A) is infinite. Expects a trimmed grammar.
std::set<std::string> infinite_nonterminals(const Grammar& g);

/// Same grammar with a different start symbol (G_A in the multi-block lemma),
/// trimmed to what A can reach.
Grammar with_start(const Grammar& g, const std::string& start);

/// Nonterminals that derive the empty word.
std::set<std::string> nullable_nonterminals(const Grammar& g);

/// Produces a name not yet used by any symbol of g, of the form base#i.
class FreshNames {
 public:
  explicit FreshNames(const Grammar& g);
  std::string next(const std::string& base);

 private:
  std::set<std::string> used_;
};

}  // namespace pumplab
