#include "pumplab/grammar.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "pumplab/error.hpp"

namespace pumplab {

std::size_t Rule::nonterminal_count() const {
  return static_cast<std::size_t>(
      std::count_if(rhs.begin(), rhs.end(), [](const Symbol& s) { return s.is_nonterminal(); }));
}

std::string format_rule(const Rule& rule) {
  std::string out = rule.lhs + " ->";
  if (rule.rhs.empty()) return out + " @eps";
  for (const auto& s : rule.rhs) out += " " + s.name;
  return out;
}

bool Grammar::is_nonterminal(std::string_view name) const {
  return std::find(nonterminals.begin(), nonterminals.end(), name) != nonterminals.end();
}

bool Grammar::is_terminal(std::string_view name) const {
  return std::find(terminals.begin(), terminals.end(), name) != terminals.end();
}

std::vector<std::size_t> Grammar::rules_for(std::string_view lhs) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].lhs == lhs) out.push_back(i);
  }
  return out;
}

std::string Violation::str() const {
  std::string name;
  switch (kind) {
    case Kind::UndeclaredSymbol: name = "undeclared-symbol"; break;
    case Kind::BadStart: name = "bad-start"; break;
    case Kind::LhsNotNonterminal: name = "lhs-not-nonterminal"; break;
    case Kind::OverlappingAlphabets: name = "overlapping-alphabets"; break;
    case Kind::NoNonterminals: name = "no-nonterminals"; break;
    case Kind::EmptyName: name = "empty-name"; break;
  }
  if (subject.empty()) return name;
  return name + "(" + subject + ")";
}

std::vector<Violation> validate(const Grammar& g) {
  std::vector<Violation> out;
  using K = Violation::Kind;
  if (g.nonterminals.empty()) out.push_back({K::NoNonterminals, "", std::nullopt});
  for (const auto& n : g.nonterminals) {
    if (n.empty()) out.push_back({K::EmptyName, "", std::nullopt});
    if (g.is_terminal(n)) out.push_back({K::OverlappingAlphabets, n, std::nullopt});
  }
  for (const auto& t : g.terminals) {
    if (t.empty()) out.push_back({K::EmptyName, "", std::nullopt});
  }
  if (!g.is_nonterminal(g.start)) out.push_back({K::BadStart, g.start, std::nullopt});
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const auto& r = g.rules[i];
    if (!g.is_nonterminal(r.lhs)) out.push_back({K::LhsNotNonterminal, r.lhs, i});
    for (const auto& s : r.rhs) {
      bool declared = s.is_nonterminal() ? g.is_nonterminal(s.name) : g.is_terminal(s.name);
      if (!declared) out.push_back({K::UndeclaredSymbol, s.name, i});
    }
  }
  return out;
}

void require_valid(const Grammar& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid grammar:";
  for (const auto& v : violations) msg += " " + v.str();
  throw Error(ErrorKind::InvalidGrammar, msg);
}

LinearShape linear_shape(const Rule& rule) {
  LinearShape shape;
  for (const auto& s : rule.rhs) {
    if (s.is_nonterminal()) {
      if (shape.nonterminal) {
        throw Error(ErrorKind::NotInClass, "rule is not linear: " + format_rule(rule));
      }
      shape.nonterminal = s.name;
    } else if (shape.nonterminal) {
      shape.suffix.push_back(s.name);
    } else {
      shape.prefix.push_back(s.name);
    }
  }
  return shape;
}

RuleRatio ratio_of(const Rule& rule) {
  auto shape = linear_shape(rule);
  if (!shape.nonterminal) return {RuleRatio::Kind::Unconstrained, {}};
  auto v = shape.prefix.size();
  auto w = shape.suffix.size();
  if (v == 0 && w == 0) return {RuleRatio::Kind::Unconstrained, {}};
  if (v == 0) return {RuleRatio::Kind::LeftRegularOnly, {}};
  return {RuleRatio::Kind::Fixed, Ratio(w, v)};
}

bool fits_ratio(const Rule& rule, Ratio k) {
  auto shape = linear_shape(rule);
  if (!shape.nonterminal) return true;
  return shape.suffix.size() * k.den() == shape.prefix.size() * k.num();
}

namespace {

ClassFlag pass() { return {true, std::nullopt}; }
ClassFlag fail(std::size_t rule) { return {false, rule}; }

// Shape check for linear-plus-one-start-rule grammars. Returns the arity on
// success, or the offending rule index.
std::pair<std::size_t, std::optional<std::size_t>> k_linear_shape(const Grammar& g) {
  std::optional<std::size_t> start_rule;
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const auto& r = g.rules[i];
    if (r.nonterminal_count() < 2) continue;
    bool all_nt = std::all_of(r.rhs.begin(), r.rhs.end(),
                              [](const Symbol& s) { return s.is_nonterminal(); });
    if (r.lhs != g.start || !all_nt || start_rule) return {0, i};
    start_rule = i;
  }
  if (!start_rule) return {0, std::nullopt};
  const auto& top = g.rules[*start_rule];
  std::set<std::string> components;
  for (const auto& s : top.rhs) components.insert(s.name);
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    if (i == *start_rule) continue;
    const auto& r = g.rules[i];
    if (r.lhs == g.start) return {0, i};  // only one start rule is allowed
    for (const auto& s : r.rhs) {
      if (s.is_nonterminal() && (s.name == g.start || components.count(s.name))) return {0, i};
    }
  }
  if (components.count(g.start)) return {0, *start_rule};
  return {top.rhs.size(), std::nullopt};
}

}  // namespace

ClassReport classify(const Grammar& g) {
  ClassReport rep;
  rep.context_free = pass();

  rep.linear = pass();
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    if (g.rules[i].nonterminal_count() > 1) {
      rep.linear = fail(i);
      break;
    }
  }

  if (!rep.linear.holds) {
    rep.k_rated = rep.even_linear = rep.regular = rep.linear;
    auto [arity, witness] = k_linear_shape(g);
    if (arity >= 2) {
      rep.k_linear = pass();
      rep.k_linear_arity = arity;
    } else {
      rep.k_linear = fail(witness.value_or(*rep.linear.witness));
    }
    rep.metalinear_shape = rep.k_linear;
    return rep;
  }

  rep.k_linear = pass();
  rep.k_linear_arity = 1;
  rep.metalinear_shape = pass();

  // The first rule with |v| + |w| > 0 fixes the candidate; order only decides
  // which rule is reported as witness.
  std::optional<Ratio> candidate;
  rep.k_rated = pass();
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    auto rr = ratio_of(g.rules[i]);
    if (rr.kind == RuleRatio::Kind::Unconstrained) continue;
    if (rr.kind == RuleRatio::Kind::LeftRegularOnly) {
      rep.k_rated = fail(i);
      break;
    }
    if (!candidate) {
      candidate = rr.value;
    } else if (!(rr.value == *candidate)) {
      rep.k_rated = fail(i);
      break;
    }
  }
  if (!rep.k_rated.holds) {
    rep.even_linear = rep.regular = rep.k_rated;
    return rep;
  }
  rep.ratio_free = !candidate.has_value();
  rep.ratio = candidate.value_or(Ratio(0, 1));

  auto check_fixed = [&](Ratio k) {
    if (rep.ratio_free || *rep.ratio == k) return pass();
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
      if (!fits_ratio(g.rules[i], k)) return fail(i);
    }
    return pass();
  };
  rep.even_linear = check_fixed(Ratio(1, 1));
  rep.regular = check_fixed(Ratio(0, 1));
  return rep;
}

std::set<std::string> nullable_nonterminals(const Grammar& g) {
  std::set<std::string> nullable;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules) {
      if (nullable.count(r.lhs)) continue;
      bool all = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
        return s.is_nonterminal() && nullable.count(s.name);
      });
      if (all) {
        nullable.insert(r.lhs);
        changed = true;
      }
    }
  }
  return nullable;
}

namespace {

std::set<std::string> productive_set(const Grammar& g) {
  std::set<std::string> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules) {
      if (productive.count(r.lhs)) continue;
      bool all = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
        return s.is_terminal() || productive.count(s.name);
      });
      if (all) {
        productive.insert(r.lhs);
        changed = true;
      }
    }
  }
  return productive;
}

}  // namespace

Grammar useful_core(const Grammar& g) {
  auto productive = productive_set(g);
  if (!productive.count(g.start)) {
    throw Error(ErrorKind::EmptyLanguage, "start symbol " + g.start + " derives no terminal word");
  }
  auto usable = [&](const Rule& r) {
    return productive.count(r.lhs) &&
           std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
             return s.is_terminal() || productive.count(s.name);
           });
  };

  std::set<std::string> reachable{g.start};
  std::queue<std::string> todo;
  todo.push(g.start);
  while (!todo.empty()) {
    auto a = todo.front();
    todo.pop();
    for (const auto& r : g.rules) {
      if (r.lhs != a || !usable(r)) continue;
      for (const auto& s : r.rhs) {
        if (s.is_nonterminal() && reachable.insert(s.name).second) todo.push(s.name);
      }
    }
  }

  Grammar out;
  out.start = g.start;
  out.terminals = g.terminals;
  for (const auto& n : g.nonterminals) {
    if (reachable.count(n)) out.nonterminals.push_back(n);
  }
  for (const auto& r : g.rules) {
    if (reachable.count(r.lhs) && usable(r)) out.rules.push_back(r);
  }
  return out;
}

std::set<std::string> infinite_nonterminals(const Grammar& g) {
  const auto& names = g.nonterminals;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;

  // Nonterminals able to derive a non-empty word.
  std::vector<bool> grows(names.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules) {
      auto a = index.at(r.lhs);
      if (grows[a]) continue;
      bool any = std::any_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
        return s.is_terminal() || grows[index.at(s.name)];
      });
      if (any) grows[a] = changed = true;
    }
  }

  struct Edge {
    std::size_t from, to;
    bool growing;  // the surrounding context can contribute terminals
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> adj(names.size());
  for (const auto& r : g.rules) {
    auto a = index.at(r.lhs);
    for (std::size_t p = 0; p < r.rhs.size(); ++p) {
      if (!r.rhs[p].is_nonterminal()) continue;
      bool growing = false;
      for (std::size_t q = 0; q < r.rhs.size(); ++q) {
        if (q == p) continue;
        const auto& s = r.rhs[q];
        if (s.is_terminal() || grows[index.at(s.name)]) growing = true;
      }
      auto b = index.at(r.rhs[p].name);
      edges.push_back({a, b, growing});
      adj[a].push_back(b);
    }
  }

  // reach[a][b]: b occurs in some sentential form derived from a (reflexive).
  std::vector<std::vector<bool>> reach(names.size(), std::vector<bool>(names.size(), false));
  for (std::size_t a = 0; a < names.size(); ++a) {
    std::queue<std::size_t> todo;
    reach[a][a] = true;
    todo.push(a);
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop();
      for (auto y : adj[x]) {
        if (!reach[a][y]) {
          reach[a][y] = true;
          todo.push(y);
        }
      }
    }
  }

  std::vector<bool> pumpable(names.size(), false);
  for (const auto& e : edges) {
    if (e.growing && reach[e.to][e.from]) pumpable[e.from] = true;
  }
  std::set<std::string> out;
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t x = 0; x < names.size(); ++x) {
      if (pumpable[x] && reach[a][x]) {
        out.insert(names[a]);
        break;
      }
    }
  }
  return out;
}

Grammar with_start(const Grammar& g, const std::string& start) {
  Grammar copy = g;
  copy.start = start;
  return useful_core(copy);
}

FreshNames::FreshNames(const Grammar& g) {
  used_.insert(g.nonterminals.begin(), g.nonterminals.end());
  used_.insert(g.terminals.begin(), g.terminals.end());
  for (const auto& r : g.rules) {
    used_.insert(r.lhs);
    for (const auto& s : r.rhs) used_.insert(s.name);
  }
}

std::string FreshNames::next(const std::string& base) {
  for (std::size_t i = 1;; ++i) {
    auto candidate = base + "#" + std::to_string(i);
    if (used_.insert(candidate).second) return candidate;
  }
}

}  // namespace pumplab
