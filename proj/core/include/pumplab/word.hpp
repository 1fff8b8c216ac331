#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pumplab {

/// A word over terminal tokens. The empty word (lambda) is the empty vector.
/// Tokens are usually single characters but grammars may declare longer ones.
using Word = std::vector<std::string>;

/// "aabb" splits per character; "id,+,id" splits on commas.
Word parse_word(std::string_view text);

/// Inverse of parse_word: concatenated when every token is one character,
/// comma-joined otherwise.
std::string format_word(const Word& word);

/// Plain concatenation of the tokens, for oracles that work on raw text.
std::string joined(const Word& word);

Word slice(const Word& word, std::size_t begin, std::size_t end);
void append(Word& out, const Word& part, std::size_t times = 1);
Word repeat(const Word& part, std::size_t times);
Word reversed(Word word);

/// Hash key that keeps token boundaries (tokens may contain any character but
/// the unit separator).
std::string word_key(const Word& word);

}  // namespace pumplab
