// pumplab: classify, normalize and parse grammars; extract, check and refute
// pumping factorizations.
//
// Exit codes: 0 success, lemma satisfied or factorization found;
//             1 refuted, word rejected or grammar not in class;
//             2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pumplab/derive.hpp"
#include "pumplab/error.hpp"
#include "pumplab/factorization.hpp"
#include "pumplab/family.hpp"
#include "pumplab/grammar.hpp"
#include "pumplab/grammar_text.hpp"
#include "pumplab/normal_forms.hpp"
#include "pumplab/oracles.hpp"
#include "pumplab/pump_check.hpp"
#include "pumplab/pump_extract.hpp"

using namespace pumplab;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInClass:
    case ErrorKind::NotInLanguage:
    case ErrorKind::Inconclusive:
      return kNegative;
    default:
      return kInputError;
  }
}

std::string yes_no(const ClassFlag& f, const Grammar& g) {
  if (f.holds) return "yes";
  if (f.witness) return "no (" + format_rule(g.rules[*f.witness]) + ")";
  return "no";
}

int cmd_classify(const std::string& path, bool json) {
  auto g = load_grammar(path);
  require_valid(g);
  auto rep = classify(g);
  if (json) {
    auto flag = [](const ClassFlag& f) {
      nlohmann::json j{{"holds", f.holds}};
      if (f.witness) j["witnessRule"] = *f.witness;
      return j;
    };
    nlohmann::json out{{"contextFree", flag(rep.context_free)},
                       {"linear", flag(rep.linear)},
                       {"kRated", flag(rep.k_rated)},
                       {"evenLinear", flag(rep.even_linear)},
                       {"regular", flag(rep.regular)},
                       {"kLinear", flag(rep.k_linear)},
                       {"metalinearShape", flag(rep.metalinear_shape)},
                       {"ratioFree", rep.ratio_free},
                       {"kLinearArity", rep.k_linear_arity}};
    out["ratio"] = rep.ratio ? nlohmann::json(rep.ratio->str()) : nlohmann::json(nullptr);
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "context-free: " << yes_no(rep.context_free, g) << '\n'
            << "linear: " << yes_no(rep.linear, g) << '\n'
            << "k-rated: " << yes_no(rep.k_rated, g);
  if (rep.k_rated.holds && rep.ratio) {
    std::cout << ' ' << (rep.ratio_free ? "(any k)" : rep.ratio->str());
  }
  std::cout << '\n'
            << "even-linear: " << yes_no(rep.even_linear, g) << '\n'
            << "regular: " << yes_no(rep.regular, g) << '\n'
            << "k-linear: " << yes_no(rep.k_linear, g);
  if (rep.k_linear.holds) std::cout << " (k = " << rep.k_linear_arity << ')';
  std::cout << '\n' << "metalinear-shape: " << yes_no(rep.metalinear_shape, g) << '\n';
  return kOk;
}

Ratio detected_ratio(const Grammar& g) {
  auto rep = classify(g);
  if (!rep.k_rated.holds) {
    throw Error(ErrorKind::NotInClass,
                "grammar is not k-rated linear: " + format_rule(g.rules[*rep.k_rated.witness]));
  }
  return *rep.ratio;
}

int cmd_normalize(const std::string& path, const std::string& form,
                  const std::optional<std::string>& k, const std::string& out) {
  auto g = load_grammar(path);
  require_valid(g);
  Grammar result;
  if (form == "k-rated") {
    result = to_k_rated_nf(g, k ? Ratio::parse(*k) : detected_ratio(g));
  } else if (form == "linear-unit") {
    result = to_linear_unit_nf(g);
  } else {
    result = to_cnf(g);
  }
  auto text = format_grammar(result);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::Usage, "cannot write " + out);
    f << text;
  }
  return kOk;
}

int cmd_parse(const std::string& path, const std::string& word, bool tree) {
  auto g = load_grammar(path);
  require_valid(g);
  auto w = parse_word(word);
  std::optional<DerivationTree> t;
  try {
    t = CykParser(to_cnf(g)).parse(w);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyLanguage) throw;
  }
  if (tree) {
    std::cout << (t ? nlohmann::json(*t) : nlohmann::json(nullptr)).dump(2) << '\n';
  } else {
    std::cout << (t ? "accepted" : "rejected") << '\n';
  }
  return t ? kOk : kNegative;
}

int cmd_enumerate(const std::string& path, std::size_t max_len) {
  auto g = load_grammar(path);
  auto words = enumerate(g, max_len);
  std::vector<Word> sorted(words.begin(), words.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (const auto& w : sorted) std::cout << (w.empty() ? "@eps" : format_word(w)) << '\n';
  return kOk;
}

/// Brings g into the normal form the lemma's extractor expects, keeping it
/// as is when it already has that shape.
Grammar normal_form_for(const Grammar& g, Lemma lemma, std::optional<Ratio> k) {
  switch (lemma) {
    case Lemma::Thm1:
    case Lemma::Thm2: {
      auto r = k ? *k : detected_ratio(g);
      return has_shape(g, NormalFormKind::KRated, r) ? g : to_k_rated_nf(g, r);
    }
    case Lemma::BarHillel:
      return has_shape(g, NormalFormKind::Chomsky) ? g : to_cnf(g);
    case Lemma::Linear:
      return has_shape(g, NormalFormKind::LinearUnit) ? g : to_linear_unit_nf(g);
    case Lemma::Regular:
      return has_shape(g, NormalFormKind::Regular) ? g : to_regular_nf(g);
    default:
      return g;
  }
}

std::size_t block_count(Lemma lemma, const std::optional<std::string>& k) {
  if (lemma == Lemma::NonlinearCf) return 2;
  if (!k) throw Error(ErrorKind::Usage, "multi needs --k, the number of blocks minus one");
  auto r = Ratio::parse(*k);
  if (r.den() != 1) throw Error(ErrorKind::Usage, "multi takes an integer --k");
  return r.num() + 1;
}

int cmd_pump(const std::string& path, const std::optional<std::string>& word,
             const std::string& lemma_text, const std::optional<std::string>& k, bool json) {
  auto g = load_grammar(path);
  require_valid(g);
  auto lemma = parse_lemma(lemma_text);
  if (is_multi_block(lemma)) {
    auto ex = extract_multilinear(g, block_count(lemma, k) - 1);
    ex.factorization.lemma = lemma;
    if (json) {
      std::cout << nlohmann::json(ex.factorization).dump(2) << '\n';
    } else {
      std::cout << "word: " << format_word(ex.word) << '\n'
                << "u: " << format_word(ex.factorization.u) << '\n';
      for (std::size_t j = 0; j < ex.factorization.blocks.size(); ++j) {
        const auto& b = ex.factorization.blocks[j];
        std::cout << "block " << j << ": v=" << format_word(b.v) << " w=" << format_word(b.w)
                  << " x=" << format_word(b.x) << " y=" << format_word(b.y) << '\n';
      }
    }
    return kOk;
  }
  if (!word) throw Error(ErrorKind::Usage, "--word is required for " + lemma_text);
  std::optional<Ratio> ratio;
  if (k) ratio = Ratio::parse(*k);
  auto nf = normal_form_for(g, lemma, ratio);
  auto f = extract(nf, parse_word(*word), lemma, ratio);
  if (json) {
    std::cout << nlohmann::json(f).dump(2) << '\n';
  } else {
    std::cout << "n = " << f.n << '\n'
              << "u = " << format_word(f.u) << '\n'
              << "v = " << format_word(f.v) << '\n'
              << "w = " << format_word(f.w) << '\n'
              << "x = " << format_word(f.x) << '\n'
              << "y = " << format_word(f.y) << '\n';
  }
  return kOk;
}

void print_report(const LemmaReport& r, bool json) {
  if (json) {
    std::cout << nlohmann::json(r).dump(2) << '\n';
    return;
  }
  std::cout << lemma_name(r.lemma);
  if (r.k) std::cout << " k=" << r.k->str();
  if (r.blocks) std::cout << " blocks=" << r.blocks;
  std::cout << ": " << verdict_name(r.verdict);
  if (r.verdict == Verdict::RefutedUpTo && r.n_hi > r.n_lo) std::cout << '(' << r.n_hi << ')';
  std::cout << '\n';
  for (const auto& w : r.words) {
    std::cout << "  " << (w.word.empty() ? "@eps" : format_word(w.word)) << ": " << w.tried
              << " tried, " << (w.survived() ? "survivor found" : "no survivor") << '\n';
  }
  if (!r.note.empty()) std::cout << r.note << '\n';
}

PumpSpec spec_from(const std::string& lemma_text, const std::optional<std::string>& k,
                   std::size_t n, std::size_t imax, std::size_t part_cap) {
  PumpSpec spec;
  spec.lemma = parse_lemma(lemma_text);
  spec.n = n;
  spec.imax = imax;
  spec.part_cap = part_cap;
  if (is_multi_block(spec.lemma)) {
    spec.blocks = block_count(spec.lemma, k);
  } else if (k) {
    spec.k = Ratio::parse(*k);
  }
  if (spec.lemma == Lemma::Regular) spec.k.reset();
  return spec;
}

int verdict_code(const LemmaReport& r) { return r.verdict == Verdict::RefutedUpTo ? kNegative : kOk; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pumplab: grammar classes, normal forms and pumping lemmas"};
  app.require_subcommand(1);
  bool json = false;

  std::string grammar_path, word_text, form, out_path, lemma_text, oracle_spec, family_text,
      family_fn;
  std::optional<std::string> k_text, word_opt;
  std::size_t max_len = 0, n = 1, imax = 4, nmax = 1, part_cap = 8;
  bool tree = false;

  auto* classify_cmd = app.add_subcommand("classify", "Report the grammar classes");
  classify_cmd->add_option("grammar", grammar_path, "Grammar file")->required();
  classify_cmd->add_flag("--json", json);

  auto* normalize_cmd = app.add_subcommand("normalize", "Convert to a normal form");
  normalize_cmd->add_option("grammar", grammar_path, "Grammar file")->required();
  normalize_cmd->add_option("--form", form, "k-rated | linear-unit | cnf")
      ->required()
      ->check(CLI::IsMember({"k-rated", "linear-unit", "cnf"}));
  normalize_cmd->add_option("--k", k_text, "Ratio G/H for k-rated");
  normalize_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* parse_cmd = app.add_subcommand("parse", "Test membership of a word");
  parse_cmd->add_option("grammar", grammar_path, "Grammar file")->required();
  parse_cmd->add_option("--word", word_text, "Word; comma-separated for multi-letter tokens")
      ->required();
  parse_cmd->add_flag("--tree", tree, "Print the derivation tree as JSON");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List words up to a length");
  enumerate_cmd->add_option("grammar", grammar_path, "Grammar file")->required();
  enumerate_cmd->add_option("--max-len", max_len, "Maximum word length")->required();

  auto* pump_cmd = app.add_subcommand("pump", "Extract a factorization from a derivation");
  pump_cmd->add_option("grammar", grammar_path, "Grammar file")->required();
  pump_cmd->add_option("--word", word_opt, "Word to factorize");
  pump_cmd->add_option("--lemma", lemma_text, "thm1 | thm2 | bar-hillel | linear | regular | multi")
      ->required();
  pump_cmd->add_option("--k", k_text, "Ratio G/H, or the block count minus one for multi");
  pump_cmd->add_flag("--json", json);

  auto* check_cmd = app.add_subcommand("check", "Check a lemma on sampled words");
  check_cmd->add_option("--oracle", oracle_spec, "Oracle spec")->required();
  check_cmd->add_option("--lemma", lemma_text, "Lemma")->required();
  check_cmd->add_option("--k", k_text, "Ratio G/H, or the block count minus one for multi");
  check_cmd->add_option("--n", n, "Lemma constant")->capture_default_str();
  check_cmd->add_option("--max-len", max_len, "Longest sampled word")->required();
  check_cmd->add_option("--imax", imax, "Largest pump exponent")->capture_default_str();
  check_cmd->add_option("--part-cap", part_cap, "Part length cap for multi-block lemmas")
      ->capture_default_str();
  check_cmd->add_flag("--json", json);

  auto* refute_cmd = app.add_subcommand("refute", "Refute a lemma on a witness family");
  refute_cmd->add_option("--oracle", oracle_spec, "Oracle spec")->required();
  refute_cmd->add_option("--lemma", lemma_text, "Lemma")->required();
  refute_cmd->add_option("--k", k_text, "Ratio G/H, or the block count minus one for multi");
  auto* fam = refute_cmd->add_option("--family", family_text, "Template such as a^(n)b^(n)");
  auto* fam_fn = refute_cmd->add_option("--family-fn", family_fn, "Named family")
                     ->check(CLI::IsMember(WitnessFamily::named_families()));
  fam->excludes(fam_fn);
  refute_cmd->add_option("--nmax", nmax, "Largest n tested")->required();
  refute_cmd->add_option("--imax", imax, "Largest pump exponent")->capture_default_str();
  refute_cmd->add_option("--part-cap", part_cap, "Part length cap for multi-block lemmas")
      ->capture_default_str();
  refute_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(grammar_path, json);
    if (*normalize_cmd) return cmd_normalize(grammar_path, form, k_text, out_path);
    if (*parse_cmd) return cmd_parse(grammar_path, word_text, tree);
    if (*enumerate_cmd) return cmd_enumerate(grammar_path, max_len);
    if (*pump_cmd) return cmd_pump(grammar_path, word_opt, lemma_text, k_text, json);
    if (*check_cmd) {
      auto spec = spec_from(lemma_text, k_text, n, imax, part_cap);
      auto report = check_satisfaction(make_oracle(oracle_spec), spec, max_len);
      print_report(report, json);
      return verdict_code(report);
    }
    if (*refute_cmd) {
      if (family_text.empty() && family_fn.empty()) {
        throw Error(ErrorKind::Usage, "refute needs --family or --family-fn");
      }
      auto family = family_fn.empty() ? WitnessFamily::parse(family_text)
                                      : WitnessFamily::named(family_fn);
      auto spec = spec_from(lemma_text, k_text, 1, imax, part_cap);
      auto oracle = make_oracle(oracle_spec);
      LemmaReport report;
      if (is_multi_block(spec.lemma)) {
        std::vector<Word> witnesses;
        for (std::size_t i = 1; i <= nmax; ++i) witnesses.push_back(family.instantiate(i));
        report = refute_multilinear(oracle, spec.blocks - 1, witnesses, imax, part_cap);
        report.lemma = spec.lemma;
        report.n_lo = 1;
        report.n_hi = nmax;
      } else {
        report = refute(oracle, spec, family, nmax);
      }
      print_report(report, json);
      return verdict_code(report);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
