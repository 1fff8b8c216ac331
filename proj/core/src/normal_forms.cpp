#include "pumplab/normal_forms.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "pumplab/derive.hpp"
#include "pumplab/error.hpp"

namespace pumplab {

namespace {

void add_rule(std::vector<Rule>& rules, Rule rule) {
  if (std::find(rules.begin(), rules.end(), rule) == rules.end()) rules.push_back(std::move(rule));
}

bool on_some_rhs(const Grammar& g, const std::string& name) {
  for (const auto& r : g.rules) {
    for (const auto& s : r.rhs) {
      if (s.is_nonterminal() && s.name == name) return true;
    }
  }
  return false;
}

std::vector<Symbol> terminals_of(const Word& w) {
  std::vector<Symbol> out;
  for (const auto& t : w) out.push_back(Symbol::terminal(t));
  return out;
}

Rule make_linear(const std::string& lhs, const Word& prefix, const std::string& nt,
                 const Word& suffix) {
  Rule r{lhs, terminals_of(prefix)};
  r.rhs.push_back(Symbol::nonterminal(nt));
  auto tail = terminals_of(suffix);
  r.rhs.insert(r.rhs.end(), tail.begin(), tail.end());
  return r;
}

void require_linear(const Grammar& g) {
  auto rep = classify(g);
  if (!rep.linear.holds) {
    throw Error(ErrorKind::NotInClass,
                "grammar is not linear: " + format_rule(g.rules[*rep.linear.witness]));
  }
}

}  // namespace

bool rule_has_shape(const Grammar& g, const Rule& rule, NormalFormKind kind, Ratio k) {
  switch (kind) {
    case NormalFormKind::EvenLinear: return rule_has_shape(g, rule, NormalFormKind::KRated, Ratio(1, 1));
    case NormalFormKind::Regular: return rule_has_shape(g, rule, NormalFormKind::KRated, Ratio(0, 1));
    case NormalFormKind::KRated: {
      if (rule.nonterminal_count() > 1) return false;
      auto shape = linear_shape(rule);
      if (!shape.nonterminal) return shape.prefix.size() < k.weight();
      return shape.prefix.size() == k.den() && shape.suffix.size() == k.num();
    }
    case NormalFormKind::LinearUnit: {
      if (rule.nonterminal_count() > 1) return false;
      auto shape = linear_shape(rule);
      if (!shape.nonterminal) {
        return shape.prefix.size() == 1 || (shape.prefix.empty() && rule.lhs == g.start);
      }
      return shape.prefix.size() + shape.suffix.size() == 1;
    }
    case NormalFormKind::Chomsky: {
      if (rule.rhs.empty()) return rule.lhs == g.start;
      if (rule.rhs.size() == 1) return rule.rhs[0].is_terminal();
      return rule.rhs.size() == 2 && rule.rhs[0].is_nonterminal() && rule.rhs[1].is_nonterminal();
    }
  }
  return false;
}

bool has_shape(const Grammar& g, NormalFormKind kind, Ratio k) {
  bool start_lambda = false;
  for (const auto& r : g.rules) {
    if (!rule_has_shape(g, r, kind, k)) return false;
    if (r.lhs == g.start && r.rhs.empty()) start_lambda = true;
  }
  if (start_lambda && (kind == NormalFormKind::Chomsky || kind == NormalFormKind::LinearUnit)) {
    return !on_some_rhs(g, g.start);
  }
  return true;
}

Grammar eliminate_unit_rules(const Grammar& g) {
  bool any = std::any_of(g.rules.begin(), g.rules.end(), [](const Rule& r) { return r.is_unit(); });
  if (!any) return g;

  Grammar out = g;
  out.rules.clear();
  for (const auto& r : g.rules) {
    if (!r.is_unit()) add_rule(out.rules, r);
  }
  for (const auto& a : g.nonterminals) {
    // Unit closure of a in breadth-first order.
    std::vector<std::string> closure{a};
    std::set<std::string> seen{a};
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (const auto& r : g.rules) {
        if (r.lhs == closure[i] && r.is_unit() && seen.insert(r.rhs[0].name).second) {
          closure.push_back(r.rhs[0].name);
        }
      }
    }
    for (std::size_t i = 1; i < closure.size(); ++i) {
      for (const auto& r : g.rules) {
        if (r.lhs == closure[i] && !r.is_unit()) add_rule(out.rules, Rule{a, r.rhs});
      }
    }
  }
  return out;
}

Grammar eliminate_lambda_rules(const Grammar& g, bool keep_start_lambda) {
  auto nullable = nullable_nonterminals(g);
  Grammar out = g;
  out.rules.clear();
  for (const auto& r : g.rules) {
    std::vector<std::size_t> optional_pos;
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
      if (r.rhs[i].is_nonterminal() && nullable.count(r.rhs[i].name)) optional_pos.push_back(i);
    }
    // Keep-everything variant first so rule order stays close to the input.
    std::size_t variants = std::size_t{1} << optional_pos.size();
    for (std::size_t mask = 0; mask < variants; ++mask) {
      Rule v{r.lhs, {}};
      for (std::size_t i = 0, o = 0; i < r.rhs.size(); ++i) {
        if (o < optional_pos.size() && optional_pos[o] == i) {
          bool drop = (mask >> o) & 1U;
          ++o;
          if (drop) continue;
        }
        v.rhs.push_back(r.rhs[i]);
      }
      if (v.rhs.empty()) continue;
      if (v.is_unit() && v.rhs[0].name == v.lhs) continue;
      add_rule(out.rules, std::move(v));
    }
  }
  if (keep_start_lambda && nullable.count(g.start)) add_rule(out.rules, Rule{g.start, {}});
  return out;
}

Grammar to_k_rated_nf(const Grammar& input, Ratio k) {
  require_valid(input);
  auto rep = classify(input);
  if (!rep.k_rated.holds) {
    throw Error(ErrorKind::NotInClass,
                "grammar is not k-rated linear: " + format_rule(input.rules[*rep.k_rated.witness]));
  }
  if (!rep.ratio_free && !(*rep.ratio == k)) {
    throw Error(ErrorKind::NotInClass,
                "grammar is " + rep.ratio->str() + "-rated, not " + k.str() + "-rated");
  }

  Grammar g = eliminate_unit_rules(input);
  Grammar out = g;
  out.rules.clear();
  FreshNames fresh(g);
  const auto h = k.den();
  const auto num = k.num();

  for (const auto& r : g.rules) {
    auto shape = linear_shape(r);
    if (shape.nonterminal) {
      auto steps = shape.prefix.size() / h;
      auto cur = r.lhs;
      for (std::size_t j = 0; j < steps; ++j) {
        auto next = (j + 1 == steps) ? *shape.nonterminal : fresh.next(r.lhs);
        if (j + 1 != steps) out.nonterminals.push_back(next);
        Word pre = slice(shape.prefix, j * h, (j + 1) * h);
        auto w = shape.suffix.size();
        Word suf = slice(shape.suffix, w - (j + 1) * num, w - j * num);
        add_rule(out.rules, make_linear(cur, pre, next, suf));
        cur = next;
      }
      continue;
    }
    Word u = shape.prefix;
    auto cur = r.lhs;
    while (u.size() >= k.weight()) {
      auto next = fresh.next(r.lhs);
      out.nonterminals.push_back(next);
      add_rule(out.rules, make_linear(cur, slice(u, 0, h), next, slice(u, u.size() - num, u.size())));
      u = slice(u, h, u.size() - num);
      cur = next;
    }
    add_rule(out.rules, Rule{cur, terminals_of(u)});
  }
  return out;
}

Grammar to_regular_nf(const Grammar& g) { return to_k_rated_nf(g, Ratio(0, 1)); }

Grammar to_linear_unit_nf(const Grammar& input) {
  require_valid(input);
  require_linear(input);
  const bool has_lambda = nullable_nonterminals(input).count(input.start) > 0;

  Grammar g = eliminate_unit_rules(eliminate_lambda_rules(input, false));
  if (has_lambda) {
    if (on_some_rhs(g, g.start)) {
      FreshNames names(g);
      auto new_start = names.next(g.start);
      std::vector<Rule> copies;
      for (const auto& r : g.rules) {
        if (r.lhs == g.start) copies.push_back(Rule{new_start, r.rhs});
      }
      g.nonterminals.insert(g.nonterminals.begin(), new_start);
      g.rules.insert(g.rules.begin(), copies.begin(), copies.end());
      g.start = new_start;
    }
    add_rule(g.rules, Rule{g.start, {}});
  }

  Grammar out = g;
  out.rules.clear();
  FreshNames fresh(g);
  for (const auto& r : g.rules) {
    auto shape = linear_shape(r);
    auto cur = r.lhs;
    if (!shape.nonterminal) {
      const auto& u = shape.prefix;
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        auto next = fresh.next(r.lhs);
        out.nonterminals.push_back(next);
        add_rule(out.rules, make_linear(cur, {u[i]}, next, {}));
        cur = next;
      }
      add_rule(out.rules, Rule{cur, terminals_of(u.empty() ? Word{} : Word{u.back()})});
      continue;
    }
    Word pre = shape.prefix;
    Word suf = shape.suffix;
    while (pre.size() + suf.size() > 1) {
      auto next = fresh.next(r.lhs);
      out.nonterminals.push_back(next);
      if (!pre.empty()) {
        add_rule(out.rules, make_linear(cur, {pre.front()}, next, {}));
        pre.erase(pre.begin());
      } else {
        add_rule(out.rules, make_linear(cur, {}, next, {suf.back()}));
        suf.pop_back();
      }
      cur = next;
    }
    add_rule(out.rules, make_linear(cur, pre, *shape.nonterminal, suf));
  }
  return out;
}

Grammar to_cnf(const Grammar& input) {
  require_valid(input);
  Grammar g = useful_core(input);
  FreshNames fresh(g);

  // START
  if (on_some_rhs(g, g.start)) {
    auto s0 = fresh.next(g.start);
    g.nonterminals.insert(g.nonterminals.begin(), s0);
    g.rules.insert(g.rules.begin(), Rule{s0, {Symbol::nonterminal(g.start)}});
    g.start = s0;
  }

  // TERM
  std::map<std::string, std::string> lifted;
  std::vector<Rule> term_rules;
  for (auto& r : g.rules) {
    if (r.rhs.size() < 2) continue;
    for (auto& s : r.rhs) {
      if (!s.is_terminal()) continue;
      auto it = lifted.find(s.name);
      if (it == lifted.end()) {
        auto name = fresh.next(s.name);
        g.nonterminals.push_back(name);
        term_rules.push_back(Rule{name, {s}});
        it = lifted.emplace(s.name, name).first;
      }
      s = Symbol::nonterminal(it->second);
    }
  }
  g.rules.insert(g.rules.end(), term_rules.begin(), term_rules.end());

  // BIN
  std::vector<Rule> binned;
  for (const auto& r : g.rules) {
    if (r.rhs.size() <= 2) {
      binned.push_back(r);
      continue;
    }
    auto cur = r.lhs;
    for (std::size_t i = 0; i + 2 < r.rhs.size(); ++i) {
      auto next = fresh.next(r.lhs);
      g.nonterminals.push_back(next);
      binned.push_back(Rule{cur, {r.rhs[i], Symbol::nonterminal(next)}});
      cur = next;
    }
    binned.push_back(Rule{cur, {r.rhs[r.rhs.size() - 2], r.rhs.back()}});
  }
  g.rules = std::move(binned);

  // DEL, UNIT
  g = eliminate_unit_rules(eliminate_lambda_rules(g, true));
  return useful_core(g);
}

EquivalenceResult bounded_equivalent(const Grammar& a, const Grammar& b, std::size_t max_len) {
  require_valid(a);
  require_valid(b);
  auto la = enumerate(a, max_len);
  auto lb = enumerate(b, max_len);
  la.erase(Word{});
  lb.erase(Word{});
  std::vector<Word> diff;
  std::set_symmetric_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return {};
  auto shortest = std::min_element(diff.begin(), diff.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return {false, *shortest};
}

}  // namespace pumplab
