#include "pumplab/derive.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "pumplab/error.hpp"
#include "pumplab/normal_forms.hpp"

namespace pumplab {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

std::map<std::string, std::size_t> min_lengths(const Grammar& g) {
  std::map<std::string, std::size_t> len;
  for (const auto& a : g.nonterminals) len[a] = kInf;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : g.rules) {
      std::size_t total = 0;
      for (const auto& s : r.rhs) total += s.is_terminal() ? 1 : len[s.name];
      total = std::min(total, kInf);
      if (total < len[r.lhs]) {
        len[r.lhs] = total;
        changed = true;
      }
    }
  }
  return len;
}

using Buckets = std::vector<std::set<Word>>;  // indexed by word length

class Enumerator {
 public:
  Enumerator(const Grammar& g, std::size_t max_len)
      : g_(g), max_len_(max_len), min_(min_lengths(g)) {
    for (const auto& a : g.nonterminals) lang_[a].resize(max_len + 1);
  }

  std::set<Word> run() {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& r : g_.rules) {
        std::vector<std::size_t> rest(r.rhs.size() + 1, 0);
        bool possible = true;
        for (std::size_t i = r.rhs.size(); i-- > 0;) {
          auto m = r.rhs[i].is_terminal() ? 1 : min_[r.rhs[i].name];
          if (m >= kInf) possible = false;
          rest[i] = std::min(rest[i + 1] + m, kInf);
        }
        if (!possible || rest[0] > max_len_) continue;
        found_.clear();
        Word cur;
        expand(r, rest, 0, cur);
        auto& out = lang_[r.lhs];
        for (auto& w : found_) {
          if (out[w.size()].insert(std::move(w)).second) changed = true;
        }
      }
    }
    std::set<Word> all;
    for (const auto& bucket : lang_[g_.start]) all.insert(bucket.begin(), bucket.end());
    return all;
  }

 private:
  void expand(const Rule& r, const std::vector<std::size_t>& rest, std::size_t pos, Word& cur) {
    if (pos == r.rhs.size()) {
      found_.push_back(cur);
      return;
    }
    const auto& s = r.rhs[pos];
    if (s.is_terminal()) {
      cur.push_back(s.name);
      expand(r, rest, pos + 1, cur);
      cur.pop_back();
      return;
    }
    const auto& buckets = lang_[s.name];
    std::size_t budget = max_len_ - cur.size() - rest[pos + 1];
    for (std::size_t l = 0; l <= budget; ++l) {
      for (const auto& w : buckets[l]) {
        auto mark = cur.size();
        cur.insert(cur.end(), w.begin(), w.end());
        expand(r, rest, pos + 1, cur);
        cur.resize(mark);
      }
    }
  }

  const Grammar& g_;
  std::size_t max_len_;
  std::map<std::string, std::size_t> min_;
  std::map<std::string, Buckets> lang_;
  std::vector<Word> found_;
};

bool matches_at(const Word& word, std::size_t pos, const Word& part) {
  if (pos + part.size() > word.size()) return false;
  return std::equal(part.begin(), part.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

std::size_t default_enumeration_cap() {
  if (const char* env = std::getenv("PUMPLAB_MAXLEN_CAP")) {
    char* end = nullptr;
    auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 16;
}

std::set<Word> enumerate(const Grammar& g, std::size_t max_len) {
  return enumerate(g, max_len, default_enumeration_cap());
}

std::set<Word> enumerate(const Grammar& g, std::size_t max_len, std::size_t cap) {
  if (max_len > cap) {
    throw Error(ErrorKind::CapExceeded, "max length " + std::to_string(max_len) +
                                            " exceeds the enumeration cap " + std::to_string(cap));
  }
  require_valid(g);
  return Enumerator(g, max_len).run();
}

// ---------------------------------------------------------------------------
// Linear derivations

Word LinearTrace::yield() const {
  Word out;
  for (const auto& s : steps) append(out, s.prefix);
  append(out, tail.word);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) append(out, it->suffix);
  return out;
}

std::vector<std::string> LinearTrace::nonterminals() const {
  std::vector<std::string> out{start};
  for (const auto& s : steps) out.push_back(s.nonterminal);
  return out;
}

std::optional<LinearTrace> parse_linear(const Grammar& g, const Word& word) {
  require_valid(g);
  auto rep = classify(g);
  if (!rep.linear.holds) {
    throw Error(ErrorKind::NotInClass,
                "grammar is not linear: " + format_rule(g.rules[*rep.linear.witness]));
  }

  const std::size_t n = g.nonterminals.size();
  const std::size_t L = word.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[g.nonterminals[i]] = i;

  std::vector<LinearShape> shapes;
  for (const auto& r : g.rules) shapes.push_back(linear_shape(r));

  // level[(a, i, j)]: fewest unit rules applied on top before a non-unit rule
  // derives word[i:j) from a. kUnset means underivable.
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> level(n * (L + 1) * (L + 1), kUnset);
  auto at = [&](std::size_t a, std::size_t i, std::size_t j) -> std::uint32_t& {
    return level[(a * (L + 1) + i) * (L + 1) + j];
  };

  auto non_unit_fits = [&](std::size_t ri, std::size_t i, std::size_t j) {
    const auto& s = shapes[ri];
    auto outer = s.prefix.size() + s.suffix.size();
    if (!s.nonterminal) {
      return outer == j - i && matches_at(word, i, s.prefix);
    }
    if (outer == 0 || outer > j - i) return false;
    if (!matches_at(word, i, s.prefix) || !matches_at(word, j - s.suffix.size(), s.suffix)) {
      return false;
    }
    return at(index[*s.nonterminal], i + s.prefix.size(), j - s.suffix.size()) != kUnset;
  };

  for (std::size_t span = 0; span <= L; ++span) {
    for (std::size_t i = 0; i + span <= L; ++i) {
      const std::size_t j = i + span;
      for (std::size_t ri = 0; ri < g.rules.size(); ++ri) {
        if (g.rules[ri].is_unit()) continue;
        if (non_unit_fits(ri, i, j)) at(index[g.rules[ri].lhs], i, j) = 0;
      }
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : g.rules) {
          if (!r.is_unit()) continue;
          auto b = at(index[r.rhs[0].name], i, j);
          auto& a = at(index[r.lhs], i, j);
          if (b != kUnset && b + 1 < a) {
            a = b + 1;
            changed = true;
          }
        }
      }
    }
  }

  if (at(index[g.start], 0, L) == kUnset) return std::nullopt;

  LinearTrace trace;
  trace.start = g.start;
  std::string cur = g.start;
  std::size_t i = 0, j = L;
  for (;;) {
    const auto a = index[cur];
    const auto lev = at(a, i, j);
    std::optional<std::size_t> chosen;
    for (auto ri : g.rules_for(cur)) {
      const auto& r = g.rules[ri];
      if (r.is_unit()) {
        auto b = at(index[r.rhs[0].name], i, j);
        if (b != kUnset && b < lev) {
          chosen = ri;
          break;
        }
      } else if (non_unit_fits(ri, i, j)) {
        chosen = ri;
        break;
      }
    }
    if (!chosen) throw Error(ErrorKind::InvalidGrammar, "linear parse reconstruction failed");
    const auto& s = shapes[*chosen];
    if (!s.nonterminal) {
      trace.tail = TraceTail{*chosen, s.prefix};
      break;
    }
    trace.steps.push_back(TraceStep{*chosen, s.prefix, *s.nonterminal, s.suffix});
    i += s.prefix.size();
    j -= s.suffix.size();
    cur = *s.nonterminal;
  }
  return trace;
}

Word replay(const Grammar& g, const LinearTrace& trace) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidGrammar, "bad trace: " + why); };
  if (trace.start != g.start) fail("does not begin at the start symbol");
  std::string cur = trace.start;
  for (const auto& step : trace.steps) {
    if (step.rule >= g.rules.size()) fail("rule index out of range");
    const auto& r = g.rules[step.rule];
    if (r.lhs != cur) fail("rule " + format_rule(r) + " applied to " + cur);
    auto s = linear_shape(r);
    if (!s.nonterminal || *s.nonterminal != step.nonterminal || s.prefix != step.prefix ||
        s.suffix != step.suffix) {
      fail("step does not match " + format_rule(r));
    }
    cur = step.nonterminal;
  }
  if (trace.tail.rule >= g.rules.size()) fail("tail rule index out of range");
  const auto& r = g.rules[trace.tail.rule];
  auto s = linear_shape(r);
  if (r.lhs != cur || s.nonterminal || s.prefix != trace.tail.word) {
    fail("tail does not match " + format_rule(r));
  }
  return trace.yield();
}

// ---------------------------------------------------------------------------
// Derivation trees

Word DerivationTree::yield() const {
  if (!rule) return Word{symbol};
  Word out;
  for (const auto& c : children) append(out, c.yield());
  return out;
}

std::size_t DerivationTree::height() const {
  if (!rule) return 0;
  std::size_t best = 0;
  for (const auto& c : children) best = std::max(best, c.height());
  return best + 1;
}

namespace {

void replay_node(const Grammar& g, const DerivationTree& t) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidGrammar, "bad tree: " + why); };
  if (!t.rule) {
    if (!g.is_terminal(t.symbol)) fail("leaf " + t.symbol + " is not a terminal");
    return;
  }
  if (*t.rule >= g.rules.size()) fail("rule index out of range");
  const auto& r = g.rules[*t.rule];
  if (r.lhs != t.symbol) fail("rule " + format_rule(r) + " at node " + t.symbol);
  if (r.rhs.size() != t.children.size()) fail("arity mismatch at " + format_rule(r));
  for (std::size_t i = 0; i < r.rhs.size(); ++i) {
    const auto& c = t.children[i];
    if (c.symbol != r.rhs[i].name || c.rule.has_value() != r.rhs[i].is_nonterminal()) {
      fail("child " + c.symbol + " does not match " + format_rule(r));
    }
    replay_node(g, c);
  }
}

}  // namespace

Word replay(const Grammar& g, const DerivationTree& tree) {
  if (tree.symbol != g.start || !tree.rule) {
    throw Error(ErrorKind::InvalidGrammar, "bad tree: root is not the start symbol");
  }
  replay_node(g, tree);
  return tree.yield();
}

void to_json(nlohmann::json& j, const DerivationTree& tree) {
  j = nlohmann::json{{"symbol", tree.symbol}};
  if (tree.rule) {
    j["rule"] = *tree.rule;
    j["children"] = tree.children;
  }
}

void from_json(const nlohmann::json& j, DerivationTree& tree) {
  tree.symbol = j.at("symbol").get<std::string>();
  tree.rule.reset();
  tree.children.clear();
  if (j.contains("rule")) {
    tree.rule = j.at("rule").get<std::size_t>();
    if (j.contains("children")) tree.children = j.at("children").get<std::vector<DerivationTree>>();
  }
}

// ---------------------------------------------------------------------------
// CYK

class CykParser::Table {
 public:
  Table(std::size_t len, std::size_t symbols)
      : len_(len), words_((symbols + 63) / 64), bits_(len * len * words_, 0) {}

  const std::uint64_t* cell(std::size_t begin, std::size_t len) const {
    return bits_.data() + ((len - 1) * len_ + begin) * words_;
  }
  std::uint64_t* cell(std::size_t begin, std::size_t len) {
    return bits_.data() + ((len - 1) * len_ + begin) * words_;
  }
  bool has(std::size_t begin, std::size_t len, std::uint32_t a) const {
    return (cell(begin, len)[a / 64] >> (a % 64)) & 1U;
  }
  void set(std::size_t begin, std::size_t len, std::uint32_t a) {
    cell(begin, len)[a / 64] |= std::uint64_t{1} << (a % 64);
  }
  std::size_t words() const { return words_; }

 private:
  std::size_t len_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

CykParser::CykParser(Grammar cnf) : g_(std::move(cnf)) {
  require_valid(g_);
  if (!has_shape(g_, NormalFormKind::Chomsky)) {
    throw Error(ErrorKind::NotInClass, "grammar is not in Chomsky normal form");
  }
  names_ = g_.nonterminals;
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < names_.size(); ++i) index[names_[i]] = i;
  start_ = index.at(g_.start);
  by_left_.resize(names_.size());
  for (std::size_t ri = 0; ri < g_.rules.size(); ++ri) {
    const auto& r = g_.rules[ri];
    if (r.rhs.empty()) {
      if (!start_lambda_) start_lambda_ = ri;
    } else if (r.rhs.size() == 1) {
      by_terminal_[r.rhs[0].name].push_back(Unary{ri, index.at(r.lhs)});
    } else {
      Binary b{ri, index.at(r.lhs), index.at(r.rhs[0].name), index.at(r.rhs[1].name)};
      binaries_.push_back(b);
      by_left_[b.left].push_back(b);
    }
  }
}

CykParser::Table CykParser::fill(const Word& word) const {
  const std::size_t L = word.size();
  Table t(L, names_.size());
  for (std::size_t i = 0; i < L; ++i) {
    auto it = by_terminal_.find(word[i]);
    if (it == by_terminal_.end()) continue;
    for (const auto& u : it->second) t.set(i, 1, u.lhs);
  }
  for (std::size_t len = 2; len <= L; ++len) {
    for (std::size_t begin = 0; begin + len <= L; ++begin) {
      for (std::size_t k = 1; k < len; ++k) {
        const auto* left = t.cell(begin, k);
        for (std::size_t w = 0; w < t.words(); ++w) {
          for (auto bits = left[w]; bits != 0; bits &= bits - 1) {
            auto b = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
            for (const auto& bin : by_left_[b]) {
              if (t.has(begin + k, len - k, bin.right)) t.set(begin, len, bin.lhs);
            }
          }
        }
      }
    }
  }
  return t;
}

bool CykParser::accepts(const Word& word) const {
  if (word.empty()) return start_lambda_.has_value();
  return fill(word).has(0, word.size(), start_);
}

std::optional<DerivationTree> CykParser::parse(const Word& word) const {
  if (word.empty()) {
    if (!start_lambda_) return std::nullopt;
    return DerivationTree{g_.start, *start_lambda_, {}};
  }
  auto t = fill(word);
  if (!t.has(0, word.size(), start_)) return std::nullopt;
  return build(t, word, start_, 0, word.size());
}

DerivationTree CykParser::build(const Table& t, const Word& word, std::uint32_t a,
                                std::size_t begin, std::size_t len) const {
  if (len == 1) {
    for (const auto& u : by_terminal_.at(word[begin])) {
      if (u.lhs == a) {
        return DerivationTree{names_[a], u.rule, {DerivationTree{word[begin], std::nullopt, {}}}};
      }
    }
  } else {
    for (const auto& bin : binaries_) {
      if (bin.lhs != a) continue;
      for (std::size_t k = 1; k < len; ++k) {
        if (t.has(begin, k, bin.left) && t.has(begin + k, len - k, bin.right)) {
          return DerivationTree{names_[a], bin.rule,
                                {build(t, word, bin.left, begin, k),
                                 build(t, word, bin.right, begin + k, len - k)}};
        }
      }
    }
  }
  throw Error(ErrorKind::InvalidGrammar, "CYK reconstruction failed");
}

std::optional<DerivationTree> parse_cyk(const Grammar& g, const Word& word) {
  return CykParser(g).parse(word);
}

// ---------------------------------------------------------------------------
// Searches

std::optional<std::vector<Symbol>> sentential_reach(const Grammar& g, std::size_t target_infinite,
                                                    std::size_t max_steps) {
  constexpr std::size_t kFrontierCap = 20000;
  auto infinite = infinite_nonterminals(g);
  auto count = [&](const std::vector<Symbol>& form) {
    return static_cast<std::size_t>(std::count_if(form.begin(), form.end(), [&](const Symbol& s) {
      return s.is_nonterminal() && infinite.count(s.name) > 0;
    }));
  };
  auto abstraction = [](const std::vector<Symbol>& form) {
    std::vector<std::string> key;
    for (const auto& s : form) {
      if (s.is_nonterminal()) key.push_back(s.name);
    }
    return key;
  };

  std::vector<std::vector<Symbol>> frontier{{Symbol::nonterminal(g.start)}};
  std::set<std::vector<std::string>> seen{abstraction(frontier[0])};
  if (count(frontier[0]) >= target_infinite) return frontier[0];

  for (std::size_t step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<std::vector<Symbol>> next;
    for (const auto& form : frontier) {
      for (std::size_t pos = 0; pos < form.size(); ++pos) {
        if (!form[pos].is_nonterminal()) continue;
        for (auto ri : g.rules_for(form[pos].name)) {
          std::vector<Symbol> out(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(pos));
          const auto& rhs = g.rules[ri].rhs;
          out.insert(out.end(), rhs.begin(), rhs.end());
          out.insert(out.end(), form.begin() + static_cast<std::ptrdiff_t>(pos) + 1, form.end());
          if (!seen.insert(abstraction(out)).second) continue;
          if (count(out) >= target_infinite) return out;
          if (next.size() < kFrontierCap) next.push_back(std::move(out));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::map<std::string, Word> shortest_yields(const Grammar& g) {
  auto len = min_lengths(g);
  auto rhs_len = [&](const Rule& r) {
    std::size_t total = 0;
    for (const auto& s : r.rhs) total += s.is_terminal() ? 1 : len[s.name];
    return std::min(total, kInf);
  };

  // Height of the shallowest minimum-length derivation, so that choosing the
  // first optimal rule whose children are strictly lower always terminates.
  std::map<std::string, std::size_t> height;
  for (const auto& a : g.nonterminals) height[a] = kInf;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : g.rules) {
      if (rhs_len(r) != len[r.lhs] || len[r.lhs] >= kInf) continue;
      std::size_t h = 0;
      for (const auto& s : r.rhs) {
        if (s.is_nonterminal()) h = std::max(h, height[s.name]);
      }
      if (h >= kInf) continue;
      if (h + 1 < height[r.lhs]) {
        height[r.lhs] = h + 1;
        changed = true;
      }
    }
  }

  std::map<std::string, Word> out;
  auto build = [&](auto&& self, const std::string& a) -> const Word& {
    if (auto it = out.find(a); it != out.end()) return it->second;
    for (auto ri : g.rules_for(a)) {
      const auto& r = g.rules[ri];
      if (rhs_len(r) != len[a]) continue;
      bool lower = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
        return s.is_terminal() || height[s.name] < height[a];
      });
      if (!lower) continue;
      Word w;
      for (const auto& s : r.rhs) {
        if (s.is_terminal()) {
          w.push_back(s.name);
        } else {
          append(w, self(self, s.name));
        }
      }
      return out[a] = std::move(w);
    }
    throw Error(ErrorKind::InvalidGrammar, "no shortest yield for " + a);
  };
  for (const auto& a : g.nonterminals) {
    if (len[a] < kInf) build(build, a);
  }
  return out;
}

std::optional<Word> shortest_word_at_least(const Grammar& cnf, std::size_t min_len) {
  require_valid(cnf);
  if (!has_shape(cnf, NormalFormKind::Chomsky)) {
    throw Error(ErrorKind::NotInClass, "grammar is not in Chomsky normal form");
  }
  const auto& names = cnf.nonterminals;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;

  if (min_len == 0) {
    for (const auto& r : cnf.rules) {
      if (r.lhs == cnf.start && r.rhs.empty()) return Word{};
    }
    min_len = 1;
  }

  const std::size_t limit = 8 * min_len + 64;
  for (std::size_t M = 2 * min_len + 2;; M = std::min(2 * M, limit)) {
    // can[a][l]: nonterminal a derives some word of length l.
    std::vector<std::vector<char>> can(names.size(), std::vector<char>(M + 1, 0));
    for (const auto& r : cnf.rules) {
      if (r.rhs.size() == 1) can[index[r.lhs]][1] = 1;
    }
    for (std::size_t l = 2; l <= M; ++l) {
      for (const auto& r : cnf.rules) {
        if (r.rhs.size() != 2) continue;
        auto a = index[r.lhs], b = index[r.rhs[0].name], c = index[r.rhs[1].name];
        if (can[a][l]) continue;
        for (std::size_t i = 1; i < l; ++i) {
          if (can[b][i] && can[c][l - i]) {
            can[a][l] = 1;
            break;
          }
        }
      }
    }
    std::optional<std::size_t> target;
    for (std::size_t l = min_len; l <= M; ++l) {
      if (can[index[cnf.start]][l]) {
        target = l;
        break;
      }
    }
    if (target) {
      auto build = [&](auto&& self, std::size_t a, std::size_t l, Word& out) -> void {
        for (const auto& r : cnf.rules) {
          if (index[r.lhs] != a) continue;
          if (l == 1 && r.rhs.size() == 1) {
            out.push_back(r.rhs[0].name);
            return;
          }
          if (l < 2 || r.rhs.size() != 2) continue;
          auto b = index[r.rhs[0].name], c = index[r.rhs[1].name];
          for (std::size_t i = 1; i < l; ++i) {
            if (can[b][i] && can[c][l - i]) {
              self(self, b, i, out);
              self(self, c, l - i, out);
              return;
            }
          }
        }
      };
      Word w;
      build(build, index[cnf.start], *target, w);
      return w;
    }
    if (M >= limit) return std::nullopt;
  }
}

}  // namespace pumplab
