#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pumplab/grammar.hpp"

namespace pumplab {

/// Reads the line-oriented grammar format:
///
///   start: S
///   nonterminals: S A
///   terminals: a b
///   S -> a S b | @eps
///
/// A token starting with '#' opens a comment; '#' inside a token (as in the
/// generated names S#1) is part of the name. Missing header lines are
/// inferred: nonterminals from rule left-hand sides, terminals from the
/// remaining right-hand-side tokens, start from the first rule.
Grammar parse_grammar(std::string_view text);

Grammar load_grammar(const std::filesystem::path& path);

/// Writes the same format back, one rule per line. parse_grammar inverts it.
std::string format_grammar(const Grammar& g);

}  // namespace pumplab
