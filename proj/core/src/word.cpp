#include "pumplab/word.hpp"

#include <algorithm>

#include "pumplab/error.hpp"

namespace pumplab {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::InvalidGrammar: return "invalid-grammar";
    case ErrorKind::NotInClass: return "not-in-class";
    case ErrorKind::EmptyLanguage: return "empty-language";
    case ErrorKind::WordTooShort: return "word-too-short";
    case ErrorKind::NotInLanguage: return "not-in-language";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Inconclusive: return "inconclusive";
    case ErrorKind::UnknownOracle: return "unknown-oracle";
    case ErrorKind::MalformedPattern: return "malformed-pattern";
    case ErrorKind::FamilyUnusable: return "family-unusable";
    case ErrorKind::LemmaMismatch: return "lemma-mismatch";
  }
  return "unknown";
}

Word parse_word(std::string_view text) {
  Word word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t begin = 0;
    while (begin <= text.size()) {
      auto end = text.find(',', begin);
      if (end == std::string_view::npos) end = text.size();
      if (end > begin) word.emplace_back(text.substr(begin, end - begin));
      begin = end + 1;
    }
    return word;
  }
  word.reserve(text.size());
  for (char c : text) word.emplace_back(1, c);
  return word;
}

std::string format_word(const Word& word) {
  bool single = std::all_of(word.begin(), word.end(),
                            [](const std::string& t) { return t.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single && i > 0) out += ',';
    out += word[i];
  }
  return out;
}

std::string joined(const Word& word) {
  std::string out;
  for (const auto& t : word) out += t;
  return out;
}

Word slice(const Word& word, std::size_t begin, std::size_t end) {
  return Word(word.begin() + static_cast<std::ptrdiff_t>(begin),
              word.begin() + static_cast<std::ptrdiff_t>(end));
}

void append(Word& out, const Word& part, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), part.begin(), part.end());
}

Word repeat(const Word& part, std::size_t times) {
  Word out;
  out.reserve(part.size() * times);
  append(out, part, times);
  return out;
}

Word reversed(Word word) {
  std::reverse(word.begin(), word.end());
  return word;
}

std::string word_key(const Word& word) {
  std::string key;
  for (const auto& t : word) {
    key += t;
    key += '\x1f';
  }
  return key;
}

}  // namespace pumplab
