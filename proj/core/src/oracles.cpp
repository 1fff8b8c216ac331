#include "pumplab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "pumplab/derive.hpp"
#include "pumplab/error.hpp"
#include "pumplab/grammar_text.hpp"
#include "pumplab/normal_forms.hpp"
#include "pumplab/pattern.hpp"

namespace pumplab {

bool is_square(std::uint64_t value) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(value)));
  while (r * r > value) --r;
  while ((r + 1) * (r + 1) <= value) ++r;
  return r * r == value;
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

bool in_h(HSet h, std::uint64_t value) {
  if (value == 0) return false;
  return h == HSet::Squares ? is_square(value) : (value & (value - 1)) == 0;
}

namespace {

struct Run {
  std::string letter;
  std::size_t count;
};

std::vector<Run> runs(const Word& w) {
  std::vector<Run> out;
  for (const auto& t : w) {
    if (!out.empty() && out.back().letter == t) {
      ++out.back().count;
    } else {
      out.push_back({t, 1});
    }
  }
  return out;
}

bool letters_are(const std::vector<Run>& r, std::initializer_list<const char*> letters) {
  if (r.size() != letters.size()) return false;
  std::size_t i = 0;
  for (const char* l : letters) {
    if (r[i++].letter != l) return false;
  }
  return true;
}

/// Counts of the blocks a^c b^c when w is such a concatenation (c >= 1), so
/// a^l b^l a^m b^m with zero exponents dropped.
std::optional<std::vector<std::size_t>> ab_blocks(const Word& w) {
  auto r = runs(w);
  if (r.size() % 2 != 0) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.size(); i += 2) {
    if (r[i].letter != "a" || r[i + 1].letter != "b" || r[i].count != r[i + 1].count) {
      return std::nullopt;
    }
    out.push_back(r[i].count);
  }
  return out;
}

Word power(const std::string& letter, std::size_t n) { return Word(n, letter); }

Word ab_word(const std::vector<std::size_t>& counts) {
  Word w;
  for (auto c : counts) {
    append(w, power("a", c));
    append(w, power("b", c));
  }
  return w;
}

/// Every word made of up to max_blocks blocks a^c b^c (c >= 1).
std::set<Word> ab_candidates(std::size_t max_blocks, std::size_t max_len) {
  std::set<Word> out;
  std::vector<std::size_t> counts;
  auto rec = [&](auto&& self, std::size_t used) -> void {
    out.insert(ab_word(counts));
    if (counts.size() == max_blocks) return;
    for (std::size_t c = 1; used + 2 * c <= max_len; ++c) {
      counts.push_back(c);
      self(self, used + 2 * c);
      counts.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::set<Word> filtered(std::set<Word> candidates, const std::function<bool(const Word&)>& member) {
  for (auto it = candidates.begin(); it != candidates.end();) {
    it = member(*it) ? std::next(it) : candidates.erase(it);
  }
  return candidates;
}

LanguageOracle make(std::string id, std::set<std::string> alphabet,
                    std::function<bool(const Word&)> member,
                    std::function<std::set<Word>(std::size_t)> candidates) {
  LanguageOracle o;
  o.id = std::move(id);
  o.alphabet = std::move(alphabet);
  o.member = member;
  o.enumerator = [member, candidates](std::size_t max_len) {
    return filtered(candidates(max_len), member);
  };
  return o;
}

bool anbncn_member(const Word& w) {
  if (w.empty()) return true;
  auto r = runs(w);
  return letters_are(r, {"a", "b", "c"}) && r[0].count == r[1].count && r[1].count == r[2].count;
}

bool abcd_member(const Word& w) {
  auto r = runs(w);
  if (r.empty()) return true;
  if (letters_are(r, {"a", "b"}) || letters_are(r, {"c", "d"})) return r[0].count == r[1].count;
  return letters_are(r, {"a", "b", "c", "d"}) && r[0].count == r[1].count &&
         r[2].count == r[3].count;
}

bool dyck_member(const Word& w) {
  long depth = 0;
  for (const auto& t : w) {
    if (t == "(") {
      ++depth;
    } else if (t == ")") {
      if (--depth < 0) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

bool palindrome_member(const Word& w) {
  if (!std::all_of(w.begin(), w.end(), [](const std::string& t) { return t == "a" || t == "b"; })) {
    return false;
  }
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

bool linpair_member(const Word& w) {
  auto r = runs(w);
  if (r.empty()) return true;
  if (letters_are(r, {"a", "b"})) return r[0].count == r[1].count;
  if (letters_are(r, {"c"})) return r[0].count == 1;
  return letters_are(r, {"a", "c", "b"}) && r[1].count == 1 && r[2].count == 2 * r[0].count;
}

bool primesquare_member(const Word& w) {
  auto r = runs(w);
  return letters_are(r, {"a", "b", "a", "b"}) && r[0].count >= 2 && r[1].count == 1 &&
         r[2].count >= 2 && is_square(r[2].count) && r[3].count >= 2;
}

bool zeroone_member(const Word& w) {
  auto r = runs(w);
  if (!letters_are(r, {"0", "1", "0", "1", "0", "1", "0", "1", "0"})) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    if (r[i].count != r[8 - i].count) return false;
  }
  return is_prime(r[2].count);
}

std::set<Word> dyck_candidates(std::size_t max_len) {
  std::set<Word> out;
  Word cur;
  auto rec = [&](auto&& self, std::size_t open, std::size_t depth) -> void {
    if (depth == 0) out.insert(cur);
    if (cur.size() + depth + 2 <= max_len && open * 2 + 2 <= max_len) {
      cur.push_back("(");
      self(self, open + 1, depth + 1);
      cur.pop_back();
    }
    if (depth > 0) {
      cur.push_back(")");
      self(self, open, depth - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::set<Word> palindrome_candidates(std::size_t max_len) {
  std::set<Word> out;
  for (std::size_t half = 0; 2 * half <= max_len; ++half) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << half); ++bits) {
      Word h;
      for (std::size_t i = 0; i < half; ++i) h.push_back((bits >> i) & 1U ? "b" : "a");
      Word even = h;
      append(even, reversed(h));
      out.insert(even);
      if (2 * half + 1 <= max_len) {
        for (const char* mid : {"a", "b"}) {
          Word odd = h;
          odd.push_back(mid);
          append(odd, reversed(h));
          out.insert(odd);
        }
      }
    }
  }
  return out;
}

LanguageOracle lh_oracle(HSet h, const std::string& id) {
  auto member = [h](const Word& w) {
    auto b = ab_blocks(w);
    if (!b) return false;
    if (b->size() == 1) return true;
    return b->size() == 2 && (in_h(h, (*b)[0]) || in_h(h, (*b)[1]));
  };
  return make(id, {"a", "b"}, member, [](std::size_t n) { return ab_candidates(2, n); });
}

LanguageOracle l2_oracle(HSet h, const std::string& id) {
  auto member = [h](const Word& w) {
    auto b = ab_blocks(w);
    if (!b) return false;
    if (b->size() == 2) return true;
    return b->size() == 3 && (in_h(h, (*b)[0]) || in_h(h, (*b)[1]) || in_h(h, (*b)[2]));
  };
  return make(id, {"a", "b"}, member, [](std::size_t n) { return ab_candidates(3, n); });
}

HSet parse_h(std::string_view name, std::string_view param) {
  if (param == "squares") return HSet::Squares;
  if (param == "powers-of-two") return HSet::PowersOfTwo;
  throw Error(ErrorKind::UnknownOracle, std::string(name) + " needs :squares or :powers-of-two");
}

}  // namespace

std::vector<std::string> builtin_oracle_names() {
  return {"anbn",         "anbncn",          "abcd",        "dyck",
          "palindrome",   "linpair",         "primesquare", "l1",
          "lh:squares",   "lh:powers-of-two", "l2:squares", "l2:powers-of-two",
          "zeroone"};
}

LanguageOracle builtin_oracle(std::string_view spec) {
  const std::string id(spec);
  auto colon = spec.find(':');
  auto name = spec.substr(0, colon);
  auto param = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (name == "lh") return lh_oracle(parse_h(name, param), id);
  if (name == "l2") return l2_oracle(parse_h(name, param), id);
  if (!param.empty()) throw Error(ErrorKind::UnknownOracle, "unknown oracle '" + id + "'");

  if (name == "anbn") {
    auto member = [](const Word& w) {
      auto b = ab_blocks(w);
      return b && b->size() <= 1;
    };
    return make(id, {"a", "b"}, member, [](std::size_t n) { return ab_candidates(1, n); });
  }
  if (name == "l1") {
    auto member = [](const Word& w) {
      auto b = ab_blocks(w);
      return b && b->size() <= 3;
    };
    return make(id, {"a", "b"}, member, [](std::size_t n) { return ab_candidates(3, n); });
  }
  if (name == "anbncn") {
    return make(id, {"a", "b", "c"}, anbncn_member, [](std::size_t n) {
      std::set<Word> out;
      for (std::size_t i = 0; 3 * i <= n; ++i) {
        Word w = power("a", i);
        append(w, power("b", i));
        append(w, power("c", i));
        out.insert(w);
      }
      return out;
    });
  }
  if (name == "abcd") {
    return make(id, {"a", "b", "c", "d"}, abcd_member, [](std::size_t n) {
      std::set<Word> out;
      for (std::size_t i = 0; 2 * i <= n; ++i) {
        for (std::size_t j = 0; 2 * (i + j) <= n; ++j) {
          Word w = power("a", i);
          append(w, power("b", i));
          append(w, power("c", j));
          append(w, power("d", j));
          out.insert(w);
        }
      }
      return out;
    });
  }
  if (name == "dyck") return make(id, {"(", ")"}, dyck_member, dyck_candidates);
  if (name == "palindrome") return make(id, {"a", "b"}, palindrome_member, palindrome_candidates);
  if (name == "linpair") {
    return make(id, {"a", "b", "c"}, linpair_member, [](std::size_t n) {
      std::set<Word> out;
      for (std::size_t m = 0; 2 * m <= n; ++m) {
        Word w = power("a", m);
        append(w, power("b", m));
        out.insert(w);
      }
      for (std::size_t m = 0; 3 * m + 1 <= n; ++m) {
        Word w = power("a", m);
        w.push_back("c");
        append(w, power("b", 2 * m));
        out.insert(w);
      }
      return out;
    });
  }
  if (name == "primesquare") {
    return make(id, {"a", "b"}, primesquare_member, [](std::size_t n) {
      std::set<Word> out;
      for (std::size_t r = 2; r + 1 + 4 + 2 <= n; ++r) {
        for (std::size_t j = 2; r + 1 + j * j + 2 <= n; ++j) {
          for (std::size_t m = 2; r + 1 + j * j + m <= n; ++m) {
            Word w = power("a", r);
            w.push_back("b");
            append(w, power("a", j * j));
            append(w, power("b", m));
            out.insert(w);
          }
        }
      }
      return out;
    });
  }
  if (name == "zeroone") {
    return make(id, {"0", "1"}, zeroone_member, [](std::size_t n) {
      std::set<Word> out;
      // 0^j 1^m 0^r 1^i 0^l 1^i 0^r 1^m 0^j, total 2(j+m+r+i) + l
      for (std::size_t j = 1; 2 * j + 7 <= n; ++j)
        for (std::size_t m = 1; 2 * (j + m) + 5 <= n; ++m)
          for (std::size_t r = 2; 2 * (j + m + r) + 3 <= n; ++r)
            for (std::size_t i = 1; 2 * (j + m + r + i) + 1 <= n; ++i)
              for (std::size_t l = 1; 2 * (j + m + r + i) + l <= n; ++l) {
                Word w = power("0", j);
                append(w, power("1", m));
                append(w, power("0", r));
                append(w, power("1", i));
                append(w, power("0", l));
                append(w, power("1", i));
                append(w, power("0", r));
                append(w, power("1", m));
                append(w, power("0", j));
                out.insert(w);
              }
      return out;
    });
  }
  throw Error(ErrorKind::UnknownOracle, "unknown oracle '" + id + "'");
}

LanguageOracle oracle_from_grammar(const Grammar& g, std::string id) {
  require_valid(g);
  struct Shared {
    std::optional<CykParser> parser;
    std::mutex mu;
    std::unordered_map<std::string, bool> memo;
  };
  auto shared = std::make_shared<Shared>();
  try {
    shared->parser.emplace(to_cnf(g));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyLanguage) throw;
  }

  LanguageOracle o;
  o.id = std::move(id);
  o.alphabet.insert(g.terminals.begin(), g.terminals.end());
  o.member = [shared](const Word& w) {
    if (!shared->parser) return false;
    auto key = word_key(w);
    {
      std::lock_guard lock(shared->mu);
      if (auto it = shared->memo.find(key); it != shared->memo.end()) return it->second;
    }
    bool result = shared->parser->accepts(w);
    std::lock_guard lock(shared->mu);
    shared->memo.emplace(std::move(key), result);
    return result;
  };
  o.enumerator = [g](std::size_t max_len) { return enumerate(g, max_len); };
  return o;
}

LanguageOracle oracle_from_pattern(std::string_view text) {
  auto pattern = std::make_shared<Pattern>(text);
  LanguageOracle o;
  o.id = "pattern:" + std::string(text);
  o.alphabet = pattern->alphabet();
  o.member = [pattern](const Word& w) { return pattern->matches(w); };
  o.enumerator = [pattern](std::size_t max_len) { return pattern->enumerate(max_len); };
  return o;
}

LanguageOracle make_oracle(std::string_view spec) {
  if (spec.rfind("pattern:", 0) == 0) return oracle_from_pattern(spec.substr(8));
  if (spec.rfind("grammar:", 0) == 0) {
    return oracle_from_grammar(load_grammar(std::string(spec.substr(8))), std::string(spec));
  }
  return builtin_oracle(spec);
}

}  // namespace pumplab
