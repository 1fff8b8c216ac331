#include "pumplab/pump_extract.hpp"

#include <map>
#include <string>

#include "pumplab/derive.hpp"
#include "pumplab/error.hpp"
#include "pumplab/normal_forms.hpp"

namespace pumplab {

namespace {

[[noreturn]] void mismatch(Lemma lemma, const std::string& form) {
  throw Error(ErrorKind::LemmaMismatch,
              std::string(lemma_name(lemma)) + " needs a grammar in " + form + " normal form");
}

Ratio resolve_ratio(const Grammar& g, std::optional<Ratio> k) {
  if (k) return *k;
  auto rep = classify(g);
  if (!rep.k_rated.holds) mismatch(Lemma::Thm1, "k-rated");
  return *rep.ratio;
}

void require_length(const Word& p, std::size_t n) {
  if (p.size() < n) {
    throw Error(ErrorKind::WordTooShort, "word has length " + std::to_string(p.size()) +
                                             ", the lemma constant is " + std::to_string(n));
  }
}

[[noreturn]] void not_in_language(const Word& p) {
  throw Error(ErrorKind::NotInLanguage, "'" + format_word(p) + "' is not in the language");
}

LinearTrace trace_of(const Grammar& g, const Word& p) {
  auto t = parse_linear(g, p);
  if (!t) not_in_language(p);
  return std::move(*t);
}

// Cuts a pine-tree derivation at forms s < t: u and y come from steps 1..s,
// v and x from steps s+1..t, w is everything inside.
Factorization cut_trace(const LinearTrace& tr, std::size_t s, std::size_t t, Lemma lemma,
                        std::optional<Ratio> k, std::size_t n) {
  Factorization f;
  f.lemma = lemma;
  f.k = k;
  f.n = n;
  const auto T = tr.steps.size();
  for (std::size_t i = 0; i < s; ++i) append(f.u, tr.steps[i].prefix);
  for (std::size_t i = s; i < t; ++i) append(f.v, tr.steps[i].prefix);
  for (std::size_t i = t; i < T; ++i) append(f.w, tr.steps[i].prefix);
  append(f.w, tr.tail.word);
  for (std::size_t i = T; i-- > t;) append(f.w, tr.steps[i].suffix);
  for (std::size_t i = t; i-- > s;) append(f.x, tr.steps[i].suffix);
  for (std::size_t i = s; i-- > 0;) append(f.y, tr.steps[i].suffix);
  return f;
}

// Earliest t in [1, last] whose nonterminal repeats some form s in [first_s, t).
std::optional<std::pair<std::size_t, std::size_t>> earliest_repeat(
    const std::vector<std::string>& forms, std::size_t first_s, std::size_t last) {
  for (std::size_t t = 1; t <= last && t < forms.size(); ++t) {
    for (std::size_t s = first_s; s < t; ++s) {
      if (forms[s] == forms[t]) return std::make_pair(s, t);
    }
  }
  return std::nullopt;
}

[[noreturn]] void no_repeat() {
  throw Error(ErrorKind::Inconclusive, "no repeated nonterminal in the derivation window");
}

}  // namespace

std::size_t lemma_constant(const Grammar& g, Lemma lemma, std::optional<Ratio> k) {
  const std::size_t N = g.nonterminals.size();
  switch (lemma) {
    case Lemma::Thm1:
    case Lemma::Thm2: {
      auto r = resolve_ratio(g, k);
      if (!has_shape(g, NormalFormKind::KRated, r)) mismatch(lemma, r.str() + "-rated");
      return (N + 1) * r.weight();
    }
    case Lemma::BarHillel:
      if (!has_shape(g, NormalFormKind::Chomsky)) mismatch(lemma, "Chomsky");
      // A CNF tree whose yield is at least 2^(|N|+1) has a path with more
      // than |N|+1 nonterminal nodes.
      return std::size_t{1} << (N + 1);
    case Lemma::Linear:
      if (!has_shape(g, NormalFormKind::LinearUnit)) mismatch(lemma, "linear-unit");
      // Every step emits one letter, so 2(|N|+1) letters need at least 2|N|+1
      // steps, and the first |N|+1 forms already contain a repetition.
      return 2 * (N + 1);
    case Lemma::Regular:
      if (!has_shape(g, NormalFormKind::Regular)) mismatch(lemma, "regular");
      // One letter per step; |N|+1 letters visit |N|+1 states after the start.
      return N + 1;
    case Lemma::NonlinearCf:
    case Lemma::Multilinear:
      break;
  }
  throw Error(ErrorKind::LemmaMismatch,
              std::string(lemma_name(lemma)) + " has no grammar-derived constant");
}

Factorization extract_thm1(const Grammar& g, const Word& p, std::optional<Ratio> k) {
  auto r = resolve_ratio(g, k);
  auto n = lemma_constant(g, Lemma::Thm1, r);
  require_length(p, n);
  auto tr = trace_of(g, p);
  // Forms 1..|N|+1 only: starting at 1 keeps u nonempty.
  auto pair = earliest_repeat(tr.nonterminals(), 1, g.nonterminals.size() + 1);
  if (!pair) no_repeat();
  return cut_trace(tr, pair->first, pair->second, Lemma::Thm1, r, n);
}

Factorization extract_thm2(const Grammar& g, const Word& p, std::optional<Ratio> k) {
  auto r = resolve_ratio(g, k);
  auto n = lemma_constant(g, Lemma::Thm2, r);
  require_length(p, n);
  auto tr = trace_of(g, p);
  const auto forms = tr.nonterminals();
  const std::size_t T = tr.steps.size();
  const std::size_t N = g.nonterminals.size();

  // Window of the last |N|+1 forms, t as late as possible. A match at t = T
  // with an empty tail would leave w empty; then look earlier, sliding the
  // window back one form at a time.
  for (std::size_t shift = 0; shift < T; ++shift) {
    const std::size_t hi = T - shift;
    const std::size_t lo = hi > N ? hi - N : 0;
    for (std::size_t t = hi; t > lo; --t) {
      if (t == T && tr.tail.word.empty()) continue;
      for (std::size_t s = t; s-- > lo;) {
        if (forms[s] == forms[t]) return cut_trace(tr, s, t, Lemma::Thm2, r, n);
      }
    }
  }
  no_repeat();
}

Factorization extract_linear(const Grammar& g, const Word& p) {
  auto n = lemma_constant(g, Lemma::Linear);
  require_length(p, n);
  auto tr = trace_of(g, p);
  auto pair = earliest_repeat(tr.nonterminals(), 0, g.nonterminals.size() + 1);
  if (!pair) no_repeat();
  return cut_trace(tr, pair->first, pair->second, Lemma::Linear, std::nullopt, n);
}

Factorization extract_regular(const Grammar& g, const Word& p) {
  auto n = lemma_constant(g, Lemma::Regular);
  require_length(p, n);
  auto tr = trace_of(g, p);
  auto pair = earliest_repeat(tr.nonterminals(), 0, g.nonterminals.size() + 1);
  if (!pair) no_repeat();
  return cut_trace(tr, pair->first, pair->second, Lemma::Regular, std::nullopt, n);
}

Factorization extract_barhillel(const Grammar& g, const Word& p) {
  auto n = lemma_constant(g, Lemma::BarHillel);
  require_length(p, n);
  auto tree = CykParser(g).parse(p);
  if (!tree) not_in_language(p);

  struct PathNode {
    std::string symbol;
    std::size_t begin, end;
  };
  std::vector<PathNode> path;
  const DerivationTree* node = &*tree;
  std::size_t begin = 0;
  while (node->rule) {
    path.push_back({node->symbol, begin, begin + node->yield().size()});
    const DerivationTree* next = nullptr;
    std::size_t next_begin = begin, offset = begin;
    for (const auto& c : node->children) {
      if (!next || c.height() > next->height()) {
        next = &c;
        next_begin = offset;
      }
      offset += c.yield().size();
    }
    node = next;
    begin = next_begin;
  }

  // Climb from the leaf; the first label already met below closes the pair.
  std::map<std::string, std::size_t> below;
  for (std::size_t i = path.size(); i-- > 0;) {
    auto it = below.find(path[i].symbol);
    if (it == below.end()) {
      below.emplace(path[i].symbol, i);
      continue;
    }
    const auto& up = path[i];
    const auto& low = path[it->second];
    Factorization f;
    f.lemma = Lemma::BarHillel;
    f.n = n;
    f.u = slice(p, 0, up.begin);
    f.v = slice(p, up.begin, low.begin);
    f.w = slice(p, low.begin, low.end);
    f.x = slice(p, low.end, up.end);
    f.y = slice(p, up.end, p.size());
    return f;
  }
  no_repeat();
}

Factorization extract(const Grammar& g, const Word& p, Lemma lemma, std::optional<Ratio> k) {
  switch (lemma) {
    case Lemma::Thm1: return extract_thm1(g, p, k);
    case Lemma::Thm2: return extract_thm2(g, p, k);
    case Lemma::BarHillel: return extract_barhillel(g, p);
    case Lemma::Linear: return extract_linear(g, p);
    case Lemma::Regular: return extract_regular(g, p);
    case Lemma::NonlinearCf:
    case Lemma::Multilinear:
      break;
  }
  throw Error(ErrorKind::Usage, "use extract_multilinear for multi-block lemmas");
}

MultiExtraction extract_multilinear(const Grammar& input, std::size_t k, std::size_t max_steps) {
  require_valid(input);
  Grammar g = useful_core(input);
  const std::size_t blocks = k + 1;
  auto form = sentential_reach(g, blocks, max_steps);
  if (!form) {
    throw Error(ErrorKind::Inconclusive, "no sentential form with " + std::to_string(blocks) +
                                             " infinite nonterminals within " +
                                             std::to_string(max_steps) + " steps");
  }

  auto infinite = infinite_nonterminals(g);
  auto shortest = shortest_yields(g);

  // alpha A_0 beta_0 ... A_k beta_k, with alpha and the betas expanded to
  // their shortest yields. Infinite nonterminals beyond the first k+1 count
  // as filler.
  Word alpha;
  std::vector<std::string> pumped;
  std::vector<Word> beta;
  for (const auto& s : *form) {
    Word* out = beta.empty() ? &alpha : &beta.back();
    if (s.is_terminal()) {
      out->push_back(s.name);
    } else if (pumped.size() < blocks && infinite.count(s.name)) {
      pumped.push_back(s.name);
      beta.emplace_back();
    } else {
      append(*out, shortest.at(s.name));
    }
  }

  std::vector<Factorization> parts;
  for (const auto& a : pumped) {
    auto cnf = to_cnf(with_start(g, a));
    auto n = lemma_constant(cnf, Lemma::BarHillel);
    auto word = shortest_word_at_least(cnf, n);
    if (!word) {
      throw Error(ErrorKind::Inconclusive, "no long word found for " + a);
    }
    parts.push_back(extract_barhillel(cnf, *word));
  }

  // u = alpha a_0; block l = (b_l, c_l, d_l, e_l beta_l a_{l+1}). The next
  // block's a_{l+1} has to sit between beta_l and b_{l+1} to keep the word.
  MultiExtraction out;
  auto& f = out.factorization;
  f.lemma = Lemma::Multilinear;
  f.u = alpha;
  append(f.u, parts[0].u);
  for (std::size_t l = 0; l < blocks; ++l) {
    Block b{parts[l].v, parts[l].w, parts[l].x, parts[l].y};
    append(b.y, beta[l]);
    if (l + 1 < blocks) append(b.y, parts[l + 1].u);
    f.blocks.push_back(std::move(b));
  }
  out.word = f.word();
  return out;
}

}  // namespace pumplab
