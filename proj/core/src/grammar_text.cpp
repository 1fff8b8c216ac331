#include "pumplab/grammar_text.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "pumplab/error.hpp"

namespace pumplab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

struct RawRule {
  std::string lhs;
  std::vector<std::string> rhs;
};

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::InvalidGrammar,
              "grammar line " + std::to_string(line_no) + ": " + what);
}

void push_unique(std::vector<std::string>& list, const std::string& name) {
  if (std::find(list.begin(), list.end(), name) == list.end()) list.push_back(name);
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::optional<std::string> start;
  std::optional<std::vector<std::string>> nonterminals;
  std::optional<std::vector<std::string>> terminals;
  std::vector<RawRule> raw;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const auto& head = tokens.front();
    if (head == "start:" || head == "nonterminals:" || head == "terminals:") {
      std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
      if (head == "start:") {
        if (rest.size() != 1) bad_line(line_no, "start: expects exactly one symbol");
        start = rest.front();
      } else if (head == "nonterminals:") {
        nonterminals = rest;
      } else {
        terminals = rest;
      }
      continue;
    }

    if (tokens.size() < 2 || tokens[1] != "->") bad_line(line_no, "expected 'LHS -> ...'");
    std::vector<std::string> alt;
    auto flush = [&] {
      if (alt.size() == 1 && alt.front() == "@eps") alt.clear();
      if (std::find(alt.begin(), alt.end(), "@eps") != alt.end()) {
        bad_line(line_no, "@eps must stand alone in an alternative");
      }
      raw.push_back({tokens[0], alt});
      alt.clear();
    };
    if (tokens.size() == 2) bad_line(line_no, "empty right-hand side, write @eps");
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (tokens[i] == "|") {
        if (alt.empty()) bad_line(line_no, "empty alternative");
        flush();
      } else {
        alt.push_back(tokens[i]);
      }
    }
    if (alt.empty()) bad_line(line_no, "empty alternative");
    flush();
  }

  Grammar g;
  if (nonterminals) {
    g.nonterminals = *nonterminals;
  } else {
    if (start) push_unique(g.nonterminals, *start);
    for (const auto& r : raw) push_unique(g.nonterminals, r.lhs);
  }
  std::set<std::string> nt_set(g.nonterminals.begin(), g.nonterminals.end());
  if (terminals) {
    g.terminals = *terminals;
  } else {
    for (const auto& r : raw) {
      for (const auto& s : r.rhs) {
        if (!nt_set.count(s)) push_unique(g.terminals, s);
      }
    }
  }
  if (start) {
    g.start = *start;
  } else if (!raw.empty()) {
    g.start = raw.front().lhs;
  } else if (!g.nonterminals.empty()) {
    g.start = g.nonterminals.front();
  }
  for (const auto& r : raw) {
    Rule rule{r.lhs, {}};
    for (const auto& s : r.rhs) {
      rule.rhs.push_back(nt_set.count(s) ? Symbol::nonterminal(s) : Symbol::terminal(s));
    }
    g.rules.push_back(std::move(rule));
  }
  return g;
}

Grammar load_grammar(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open grammar file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str());
}

std::string format_grammar(const Grammar& g) {
  std::string out = "start: " + g.start + "\nnonterminals:";
  for (const auto& n : g.nonterminals) out += " " + n;
  out += "\nterminals:";
  for (const auto& t : g.terminals) out += " " + t;
  out += "\n";
  for (const auto& r : g.rules) out += format_rule(r) + "\n";
  return out;
}

}  // namespace pumplab
