#include "pumplab/pump_check.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "pumplab/error.hpp"

namespace pumplab {

void PumpSpec::check() const {
  if (needs_ratio(lemma) && !k) {
    throw Error(ErrorKind::Usage, std::string(lemma_name(lemma)) + " needs a ratio k = G/H");
  }
  if (is_multi_block(lemma)) {
    if (blocks == 0) throw Error(ErrorKind::Usage, "multi-block lemmas need at least one block");
    if (lemma == Lemma::NonlinearCf && blocks != 2) {
      throw Error(ErrorKind::Usage, "nonlinear-cf pumps exactly two blocks");
    }
    if (part_cap == 0) throw Error(ErrorKind::Usage, "part cap must be positive");
  } else if (n == 0) {
    throw Error(ErrorKind::Usage, "the lemma constant n must be positive");
  }
}

namespace {

Validity violated(std::string what) { return {false, std::move(what)}; }

void require_same_lemma(Lemma made_for, const PumpSpec& spec) {
  if (made_for != spec.lemma) {
    throw Error(ErrorKind::LemmaMismatch, "factorization is for " +
                                              std::string(lemma_name(made_for)) + ", spec is " +
                                              std::string(lemma_name(spec.lemma)));
  }
}

}  // namespace

Validity valid_factorization(const Factorization& f, const PumpSpec& spec) {
  spec.check();
  require_same_lemma(f.lemma, spec);
  const std::uint64_t U = f.u.size(), V = f.v.size(), W = f.w.size(), X = f.x.size(),
                      Y = f.y.size(), n = spec.n;
  switch (spec.lemma) {
    case Lemma::Regular:
      if (X != 0 || Y != 0) return violated("x = y = λ");
      if (V == 0) return violated("0 < |v|");
      if (U + V > n) return violated("|uv| <= n");
      return {};
    case Lemma::Linear:
      if (V + X == 0) return violated("0 < |vx|");
      if (U + V + X + Y > n) return violated("|uvxy| <= n");
      return {};
    case Lemma::BarHillel:
      if (V + X == 0) return violated("0 < |vx|");
      if (V + W + X > n) return violated("|vwx| <= n");
      return {};
    case Lemma::Thm1:
    case Lemma::Thm2: {
      const std::uint64_t g = spec.k->num(), h = spec.k->den(), s = g + h;
      const bool first = spec.lemma == Lemma::Thm1;
      if (first && U == 0) return violated("0 < |u|");
      if (V == 0) return violated("0 < |v|");
      if (first && U * s > n * h) return violated("|u|(g+h) <= nh");
      if (V * s > n * h) return violated("|v|(g+h) <= nh");
      if (g > 0) {
        if (X == 0) return violated("0 < |x|");
        if (first && Y == 0) return violated("0 < |y|");
        if (X * s > n * g) return violated("|x|(g+h) <= ng");
        if (first && Y * s > n * g) return violated("|y|(g+h) <= ng");
      }
      if (!first) {
        if (W == 0) return violated("0 < |w|");
        if (W > n) return violated("|w| <= n");
      }
      if (h * X != g * V) return violated("h|x| = g|v|");
      if (h * Y != g * U) return violated("h|y| = g|u|");
      return {};
    }
    case Lemma::NonlinearCf:
    case Lemma::Multilinear:
      break;
  }
  throw Error(ErrorKind::LemmaMismatch, "multi-block lemmas need a MultiFactorization");
}

Validity valid_factorization(const MultiFactorization& f, const PumpSpec& spec) {
  spec.check();
  require_same_lemma(f.lemma, spec);
  if (!is_multi_block(spec.lemma)) {
    throw Error(ErrorKind::LemmaMismatch, "single-block lemmas need a Factorization");
  }
  if (f.blocks.size() != spec.blocks) {
    return violated(std::to_string(spec.blocks) + " blocks");
  }
  for (std::size_t j = 0; j < f.blocks.size(); ++j) {
    if (f.blocks[j].v.empty() && f.blocks[j].x.empty()) {
      return violated("0 < |v_" + std::to_string(j) + " x_" + std::to_string(j) + "|");
    }
  }
  return {};
}

Factorization factorization_at(const Word& p, const Split& s, const PumpSpec& spec) {
  Factorization f;
  f.lemma = spec.lemma;
  f.k = spec.k;
  f.n = spec.n;
  f.u = slice(p, 0, s[0]);
  f.v = slice(p, s[0], s[1]);
  f.w = slice(p, s[1], s[2]);
  f.x = slice(p, s[2], s[3]);
  f.y = slice(p, s[3], p.size());
  return f;
}

std::vector<Split> valid_splits(const Word& p, const PumpSpec& spec) {
  spec.check();
  const std::size_t L = p.size();
  const std::size_t n = spec.n;
  std::vector<Split> out;
  auto consider = [&](const Split& s) {
    if (valid_factorization(factorization_at(p, s, spec), spec)) out.push_back(s);
  };

  switch (spec.lemma) {
    case Lemma::Regular:
      for (std::size_t a = 0; a <= L; ++a)
        for (std::size_t b = a + 1; b <= L; ++b) consider({a, b, L, L});
      break;
    case Lemma::Linear:
      // |uvxy| = b + (L - c) <= n
      for (std::size_t a = 0; a <= L; ++a)
        for (std::size_t b = a; b <= L; ++b)
          for (std::size_t c = std::max(b, b + L > n ? b + L - n : 0); c <= L; ++c)
            for (std::size_t d = c; d <= L; ++d) consider({a, b, c, d});
      break;
    case Lemma::BarHillel:
      // |vwx| = d - a <= n
      for (std::size_t a = 0; a <= L; ++a)
        for (std::size_t b = a; b <= L; ++b)
          for (std::size_t c = b; c <= L; ++c)
            for (std::size_t d = c; d <= std::min(L, a + n); ++d) consider({a, b, c, d});
      break;
    case Lemma::Thm1:
    case Lemma::Thm2: {
      // h|x| = g|v| and h|y| = g|u| fix x and y once u and v are chosen.
      const std::size_t g = spec.k->num(), h = spec.k->den();
      for (std::size_t a = 0; a <= L; ++a) {
        if ((g * a) % h != 0) continue;
        const std::size_t Y = g * a / h;
        for (std::size_t b = a; b <= L; ++b) {
          if ((g * (b - a)) % h != 0) continue;
          const std::size_t X = g * (b - a) / h;
          if (b + X + Y > L) break;
          consider({a, b, L - Y - X, L - Y});
        }
      }
      break;
    }
    case Lemma::NonlinearCf:
    case Lemma::Multilinear:
      throw Error(ErrorKind::LemmaMismatch, "multi-block lemmas have no single split");
  }
  return out;
}

bool MemoOracle::operator()(const Word& w) {
  auto key = word_key(w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool result = oracle_.member(w);
  memo_.emplace(std::move(key), result);
  return result;
}

std::optional<std::size_t> first_failing_exponent(const Factorization& f, MemoOracle& member,
                                                  std::size_t imax) {
  for (std::size_t i = 0; i <= imax; ++i) {
    if (!member(pump(f, i))) return i;
  }
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SatisfiedEvidence: return "satisfied-evidence";
    case Verdict::RefutedUpTo: return "refuted-up-to";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(std::string_view name) {
  for (auto v : {Verdict::SatisfiedEvidence, Verdict::RefutedUpTo, Verdict::Inconclusive}) {
    if (verdict_name(v) == name) return v;
  }
  throw Error(ErrorKind::Usage, "unknown verdict '" + std::string(name) + "'");
}

namespace {

WordAudit audit_single(const Word& p, const PumpSpec& spec, MemoOracle& member) {
  WordAudit audit;
  audit.n = spec.n;
  audit.word = p;
  for (const auto& s : valid_splits(p, spec)) {
    auto f = factorization_at(p, s, spec);
    ++audit.tried;
    auto i = first_failing_exponent(f, member, spec.imax);
    if (!i) {
      audit.survivor = std::move(f);
      audit.failures.clear();
      break;
    }
    audit.failures.push_back({{s.begin(), s.end()}, {*i}, pump(f, *i)});
  }
  return audit;
}

struct Pair {
  std::size_t a, b, c, d;
};

Word pump_blocks(const Word& p, const std::vector<const Pair*>& chain,
                 const std::vector<std::size_t>& exps) {
  Word out;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const auto& q = *chain[j];
    append(out, slice(p, pos, q.a));
    append(out, slice(p, q.a, q.b), exps[j]);
    append(out, slice(p, q.b, q.c));
    append(out, slice(p, q.c, q.d), exps[j]);
    pos = q.d;
  }
  append(out, slice(p, pos, p.size()));
  return out;
}

WordAudit audit_multi(const Word& p, Lemma lemma, std::size_t blocks, std::size_t imax,
                      std::size_t cap, MemoOracle& member) {
  WordAudit audit;
  audit.word = p;
  const std::size_t L = p.size();
  const std::size_t top = std::min<std::size_t>(imax, 3);

  // A block can only survive the grid if it survives alone with the other
  // blocks at exponent 1, so single-block pumpability prunes the chains.
  std::vector<std::vector<Pair>> by_start(L + 1);
  for (std::size_t a = 0; a <= L; ++a)
    for (std::size_t b = a; b <= std::min(L, a + cap); ++b)
      for (std::size_t c = b; c <= std::min(L, b + cap); ++c)
        for (std::size_t d = c; d <= std::min(L, c + cap); ++d) {
          if (b == a && d == c) continue;
          Pair q{a, b, c, d};
          bool ok = true;
          for (std::size_t e = 0; e <= top && ok; ++e) {
            if (e != 1) ok = member(pump_blocks(p, {&q}, {e}));
          }
          if (ok) by_start[a].push_back(q);
        }

  std::vector<const Pair*> chain;
  std::vector<std::size_t> exps(blocks, 0);
  bool found = false;

  auto grid = [&]() -> std::optional<std::vector<std::size_t>> {
    std::fill(exps.begin(), exps.end(), 0);
    for (;;) {
      if (!member(pump_blocks(p, chain, exps))) return exps;
      std::size_t j = blocks;
      while (j > 0 && exps[j - 1] == top) exps[--j] = 0;
      if (j == 0) return std::nullopt;
      ++exps[j - 1];
    }
  };

  auto dfs = [&](auto&& self, std::size_t prev_end) -> void {
    if (chain.size() == blocks) {
      if (L - prev_end > cap) return;
      ++audit.tried;
      auto fail = grid();
      if (!fail) {
        found = true;
        return;
      }
      Failure rec;
      for (const auto* q : chain) rec.split.insert(rec.split.end(), {q->a, q->b, q->c, q->d});
      rec.exponents = *fail;
      rec.pumped = pump_blocks(p, chain, *fail);
      audit.failures.push_back(std::move(rec));
      return;
    }
    for (std::size_t a = prev_end; a <= std::min(L, prev_end + cap) && !found; ++a) {
      for (const auto& q : by_start[a]) {
        chain.push_back(&q);
        self(self, q.d);
        if (found) return;
        chain.pop_back();
      }
    }
  };
  dfs(dfs, 0);

  if (found) {
    MultiFactorization f;
    f.lemma = lemma;
    f.u = slice(p, 0, chain.front()->a);
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const auto& q = *chain[j];
      auto next = j + 1 < chain.size() ? chain[j + 1]->a : L;
      f.blocks.push_back(
          {slice(p, q.a, q.b), slice(p, q.b, q.c), slice(p, q.c, q.d), slice(p, q.d, next)});
    }
    audit.multi_survivor = std::move(f);
    audit.failures.clear();
  }
  return audit;
}

LemmaReport multi_report(const LanguageOracle& oracle, Lemma lemma, std::size_t blocks,
                         const std::vector<Word>& witnesses, std::size_t imax, std::size_t cap) {
  MemoOracle member(oracle);
  LemmaReport r;
  r.lemma = lemma;
  r.blocks = blocks;
  r.imax = imax;
  std::size_t survived = 0;
  for (const auto& p : witnesses) {
    r.words.push_back(audit_multi(p, lemma, blocks, imax, cap, member));
    if (r.words.back().survived()) ++survived;
  }
  if (witnesses.empty()) {
    r.verdict = Verdict::Inconclusive;
  } else if (survived == witnesses.size()) {
    r.verdict = Verdict::SatisfiedEvidence;
  } else if (survived == 0) {
    r.verdict = Verdict::RefutedUpTo;
  } else {
    r.verdict = Verdict::Inconclusive;
  }
  r.note = std::to_string(survived) + " of " + std::to_string(witnesses.size()) +
           " witnesses admit a surviving " + std::to_string(blocks) +
           "-block factorization; exponent grid 0.." +
           std::to_string(std::min<std::size_t>(imax, 3)) + " per block, every part at most " +
           std::to_string(cap) + " letters. Finitely many witnesses are evidence, not a proof.";
  return r;
}

}  // namespace

LemmaReport check_satisfaction(const LanguageOracle& oracle, const PumpSpec& spec,
                               std::size_t max_len) {
  spec.check();
  if (!oracle.enumerator) {
    throw Error(ErrorKind::Usage, "oracle " + oracle.id + " cannot enumerate its words");
  }
  std::vector<Word> words;
  for (auto& w : oracle.enumerator(max_len)) {
    if (w.size() >= spec.n && w.size() <= max_len) words.push_back(w);
  }
  std::stable_sort(words.begin(), words.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });

  LemmaReport r;
  if (is_multi_block(spec.lemma)) {
    r = multi_report(oracle, spec.lemma, spec.blocks, words, spec.imax, spec.part_cap);
  } else {
    MemoOracle member(oracle);
    r.lemma = spec.lemma;
    r.k = spec.k;
    r.imax = spec.imax;
    std::size_t failed = 0;
    for (const auto& p : words) {
      r.words.push_back(audit_single(p, spec, member));
      if (!r.words.back().survived()) ++failed;
    }
    r.verdict = failed == 0 ? Verdict::SatisfiedEvidence : Verdict::RefutedUpTo;
    r.note = std::to_string(words.size() - failed) + " of " + std::to_string(words.size()) +
             " words of length " + std::to_string(spec.n) + ".." + std::to_string(max_len) +
             " keep a valid factorization through i = 0.." + std::to_string(spec.imax) + ".";
  }
  r.n_lo = r.n_hi = spec.n;
  if (words.empty()) {
    r.verdict = Verdict::Inconclusive;
    r.note = "no word of length " + std::to_string(spec.n) + ".." + std::to_string(max_len) +
             " in the language";
  }
  return r;
}

LemmaReport refute(const LanguageOracle& oracle, const PumpSpec& spec, const WitnessFamily& family,
                   std::size_t nmax) {
  spec.check();
  if (is_multi_block(spec.lemma)) {
    throw Error(ErrorKind::Usage, "use refute_multilinear for multi-block lemmas");
  }
  MemoOracle member(oracle);
  LemmaReport r;
  r.lemma = spec.lemma;
  r.k = spec.k;
  r.imax = spec.imax;
  r.n_lo = 1;
  r.n_hi = nmax;
  std::size_t survived = 0;
  for (std::size_t n = 1; n <= nmax; ++n) {
    PumpSpec at = spec;
    at.n = n;
    auto p = family.instantiate(n);
    if (p.size() < n) {
      throw Error(ErrorKind::FamilyUnusable, "witness for n = " + std::to_string(n) +
                                                 " has length " + std::to_string(p.size()));
    }
    if (!member(p)) {
      throw Error(ErrorKind::FamilyUnusable,
                  "witness for n = " + std::to_string(n) + " is not in " + oracle.id);
    }
    r.words.push_back(audit_single(p, at, member));
    if (r.words.back().survived()) ++survived;
  }
  r.verdict = survived == 0 ? Verdict::RefutedUpTo : Verdict::Inconclusive;
  r.note = survived == 0
               ? "no valid factorization survives pumping for any tested n <= " +
                     std::to_string(nmax) + "; larger n are not covered"
               : std::to_string(survived) + " witness words keep a surviving factorization";
  return r;
}

LemmaReport refute_multilinear(const LanguageOracle& oracle, std::size_t k,
                               const std::vector<Word>& witnesses, std::size_t imax,
                               std::size_t part_cap) {
  PumpSpec spec;
  spec.lemma = Lemma::Multilinear;
  spec.blocks = k + 1;
  spec.part_cap = part_cap;
  spec.check();
  return multi_report(oracle, Lemma::Multilinear, k + 1, witnesses, imax, part_cap);
}

// ---------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json& j, const LemmaReport& r) {
  auto words = nlohmann::json::array();
  const bool multi = is_multi_block(r.lemma);
  for (const auto& a : r.words) {
    nlohmann::json w{{"n", a.n}, {"word", format_word(a.word)}, {"factorizationsTried", a.tried}};
    if (a.survivor) w["survivor"] = *a.survivor;
    if (a.multi_survivor) w["survivor"] = *a.multi_survivor;
    if (!a.survived()) {
      auto failures = nlohmann::json::array();
      for (const auto& f : a.failures) {
        nlohmann::json i = multi ? nlohmann::json(f.exponents) : nlohmann::json(f.exponents.at(0));
        failures.push_back({{"split", f.split}, {"failingI", i}, {"pumpedWord", format_word(f.pumped)}});
      }
      w["failures"] = std::move(failures);
    }
    words.push_back(std::move(w));
  }
  j = nlohmann::json{{"verdict", verdict_name(r.verdict)},
                     {"lemma", lemma_name(r.lemma)},
                     {"nRange", {r.n_lo, r.n_hi}},
                     {"imax", r.imax},
                     {"words", std::move(words)},
                     {"note", r.note}};
  j["k"] = r.k ? nlohmann::json{{"g", r.k->num()}, {"h", r.k->den()}} : nlohmann::json(nullptr);
  if (multi) j["blocks"] = r.blocks;
}

void from_json(const nlohmann::json& j, LemmaReport& r) {
  r = LemmaReport{};
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.lemma = parse_lemma(j.at("lemma").get<std::string>());
  if (j.contains("k") && !j.at("k").is_null()) {
    r.k = Ratio(j.at("k").at("g").get<std::uint64_t>(), j.at("k").at("h").get<std::uint64_t>());
  }
  r.n_lo = j.at("nRange").at(0).get<std::size_t>();
  r.n_hi = j.at("nRange").at(1).get<std::size_t>();
  r.imax = j.at("imax").get<std::size_t>();
  r.note = j.value("note", "");
  r.blocks = j.value("blocks", std::size_t{0});
  for (const auto& w : j.at("words")) {
    WordAudit a;
    a.n = w.at("n").get<std::size_t>();
    a.word = parse_word(w.at("word").get<std::string>());
    a.tried = w.at("factorizationsTried").get<std::size_t>();
    if (w.contains("survivor")) {
      if (is_multi_block(r.lemma)) {
        a.multi_survivor = w.at("survivor").get<MultiFactorization>();
      } else {
        a.survivor = w.at("survivor").get<Factorization>();
      }
    }
    if (w.contains("failures")) {
      for (const auto& f : w.at("failures")) {
        Failure rec;
        rec.split = f.at("split").get<std::vector<std::size_t>>();
        const auto& i = f.at("failingI");
        rec.exponents = i.is_array() ? i.get<std::vector<std::size_t>>()
                                     : std::vector<std::size_t>{i.get<std::size_t>()};
        rec.pumped = parse_word(f.at("pumpedWord").get<std::string>());
        a.failures.push_back(std::move(rec));
      }
    }
    r.words.push_back(std::move(a));
  }
}

}  // namespace pumplab
