#include "pumplab/pattern.hpp"

#include <algorithm>
#include <cctype>

#include "pumplab/error.hpp"

namespace pumplab {

namespace {
struct Fragment {
  int start, accept;
};
}  // namespace

// Recursive descent:
//   alt    := concat ('|' concat)*
//   concat := starred*
//   starred:= atom '*'*
//   atom   := literal | '(' alt ')'
class PatternParser {
 public:
  PatternParser(Pattern& p, std::string src) : p_(p), src_(std::move(src)) {}

  Fragment parse() {
    auto f = alt();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedPattern,
                "pattern '" + p_.text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  bool at(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  void link(int from, int to) { p_.nodes_[static_cast<std::size_t>(from)].eps.push_back(to); }

  Fragment alt() {
    auto f = concat();
    while (at('|')) {
      ++pos_;
      auto g = concat();
      Fragment both{p_.add_node(), p_.add_node()};
      link(both.start, f.start);
      link(both.start, g.start);
      link(f.accept, both.accept);
      link(g.accept, both.accept);
      f = both;
    }
    return f;
  }

  Fragment concat() {
    int s = p_.add_node();
    Fragment f{s, s};
    while (pos_ < src_.size() && !at('|') && !at(')')) {
      auto g = starred();
      link(f.accept, g.start);
      f.accept = g.accept;
    }
    return f;
  }

  Fragment starred() {
    if (at('*')) fail("'*' without an operand");
    auto f = atom();
    while (at('*')) {
      ++pos_;
      Fragment loop{p_.add_node(), p_.add_node()};
      link(loop.start, f.start);
      link(loop.start, loop.accept);
      link(f.accept, f.start);
      link(f.accept, loop.accept);
      f = loop;
    }
    return f;
  }

  Fragment atom() {
    if (at('(')) {
      ++pos_;
      auto f = alt();
      if (!at(')')) fail("missing ')'");
      ++pos_;
      return f;
    }
    char c = src_[pos_++];
    Fragment f{p_.add_node(), p_.add_node()};
    auto& n = p_.nodes_[static_cast<std::size_t>(f.start)];
    n.symbol = c;
    n.target = f.accept;
    p_.alphabet_.insert(std::string(1, c));
    return f;
  }

  Pattern& p_;
  std::string src_;
  std::size_t pos_ = 0;
};

Pattern::Pattern(std::string_view text) : text_(text) {
  std::string src;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) src += c;
  }
  auto f = PatternParser(*this, src).parse();
  start_ = f.start;
  accept_ = f.accept;
}

int Pattern::add_node() {
  nodes_.emplace_back();
  return static_cast<int>(nodes_.size()) - 1;
}

Pattern::States Pattern::closure(States set) const {
  std::vector<int> stack;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i]) stack.push_back(static_cast<int>(i));
  }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : nodes_[static_cast<std::size_t>(s)].eps) {
      if (!set[static_cast<std::size_t>(t)]) {
        set[static_cast<std::size_t>(t)] = 1;
        stack.push_back(t);
      }
    }
  }
  return set;
}

Pattern::States Pattern::step(const States& set, char c) const {
  States next(nodes_.size(), 0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] && nodes_[i].target >= 0 && nodes_[i].symbol == c) {
      next[static_cast<std::size_t>(nodes_[i].target)] = 1;
    }
  }
  return closure(std::move(next));
}

bool Pattern::matches(const Word& word) const {
  States cur(nodes_.size(), 0);
  cur[static_cast<std::size_t>(start_)] = 1;
  cur = closure(std::move(cur));
  for (const auto& tok : word) {
    if (tok.size() != 1) return false;
    cur = step(cur, tok[0]);
    if (std::none_of(cur.begin(), cur.end(), [](char b) { return b != 0; })) return false;
  }
  return accepting(cur);
}

std::set<Word> Pattern::enumerate(std::size_t max_len) const {
  std::set<Word> out;
  Word cur;
  auto dfs = [&](auto&& self, const States& set) -> void {
    if (accepting(set)) out.insert(cur);
    if (cur.size() == max_len) return;
    for (const auto& a : alphabet_) {
      auto next = step(set, a[0]);
      if (std::none_of(next.begin(), next.end(), [](char b) { return b != 0; })) continue;
      cur.push_back(a);
      self(self, next);
      cur.pop_back();
    }
  };
  States init(nodes_.size(), 0);
  init[static_cast<std::size_t>(start_)] = 1;
  dfs(dfs, closure(std::move(init)));
  return out;
}

}  // namespace pumplab
