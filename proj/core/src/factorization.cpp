#include "pumplab/factorization.hpp"

#include <array>

#include <nlohmann/json.hpp>

#include "pumplab/error.hpp"

namespace pumplab {

namespace {

constexpr std::array<std::pair<Lemma, std::string_view>, 7> kNames{{
    {Lemma::Regular, "regular"},
    {Lemma::Linear, "linear"},
    {Lemma::BarHillel, "bar-hillel"},
    {Lemma::Thm1, "thm1"},
    {Lemma::Thm2, "thm2"},
    {Lemma::NonlinearCf, "nonlinear-cf"},
    {Lemma::Multilinear, "multi"},
}};

Word word_field(const nlohmann::json& j, const char* key) {
  return parse_word(j.at(key).get<std::string>());
}

}  // namespace

std::string_view lemma_name(Lemma lemma) {
  for (const auto& [l, name] : kNames) {
    if (l == lemma) return name;
  }
  return "unknown";
}

Lemma parse_lemma(std::string_view name) {
  if (name == "multilinear") return Lemma::Multilinear;
  for (const auto& [l, n] : kNames) {
    if (n == name) return l;
  }
  throw Error(ErrorKind::Usage, "unknown lemma '" + std::string(name) +
                                    "' (expected regular, linear, bar-hillel, thm1, thm2, "
                                    "nonlinear-cf or multi)");
}

bool needs_ratio(Lemma lemma) { return lemma == Lemma::Thm1 || lemma == Lemma::Thm2; }

bool is_multi_block(Lemma lemma) {
  return lemma == Lemma::NonlinearCf || lemma == Lemma::Multilinear;
}

Word Factorization::word() const { return pump(*this, 1); }

Word MultiFactorization::word() const {
  return pump(*this, std::vector<std::size_t>(blocks.size(), 1));
}

Word pump(const Factorization& f, std::size_t i) {
  Word out = f.u;
  append(out, f.v, i);
  append(out, f.w);
  append(out, f.x, i);
  append(out, f.y);
  return out;
}

Word pump(const MultiFactorization& f, const std::vector<std::size_t>& exponents) {
  if (exponents.size() != f.blocks.size()) {
    throw Error(ErrorKind::Usage, "expected " + std::to_string(f.blocks.size()) + " exponents");
  }
  Word out = f.u;
  for (std::size_t j = 0; j < f.blocks.size(); ++j) {
    const auto& b = f.blocks[j];
    append(out, b.v, exponents[j]);
    append(out, b.w);
    append(out, b.x, exponents[j]);
    append(out, b.y);
  }
  return out;
}

void to_json(nlohmann::json& j, const Factorization& f) {
  j = nlohmann::json{
      {"lemma", lemma_name(f.lemma)},
      {"word", format_word(f.word())},
      {"u", format_word(f.u)},
      {"v", format_word(f.v)},
      {"w", format_word(f.w)},
      {"x", format_word(f.x)},
      {"y", format_word(f.y)},
      {"n", f.n},
  };
  j["k"] = f.k ? nlohmann::json{{"g", f.k->num()}, {"h", f.k->den()}} : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, Factorization& f) {
  f.lemma = parse_lemma(j.at("lemma").get<std::string>());
  f.u = word_field(j, "u");
  f.v = word_field(j, "v");
  f.w = word_field(j, "w");
  f.x = word_field(j, "x");
  f.y = word_field(j, "y");
  f.n = j.at("n").get<std::size_t>();
  f.k.reset();
  if (j.contains("k") && !j.at("k").is_null()) {
    f.k = Ratio(j.at("k").at("g").get<std::size_t>(), j.at("k").at("h").get<std::size_t>());
  }
  if (j.contains("word") && word_field(j, "word") != f.word()) {
    throw Error(ErrorKind::Usage, "factorization parts do not concatenate to its word");
  }
}

void to_json(nlohmann::json& j, const MultiFactorization& f) {
  auto blocks = nlohmann::json::array();
  for (const auto& b : f.blocks) {
    blocks.push_back({{"v", format_word(b.v)},
                      {"w", format_word(b.w)},
                      {"x", format_word(b.x)},
                      {"y", format_word(b.y)}});
  }
  j = nlohmann::json{{"lemma", lemma_name(f.lemma)},
                     {"word", format_word(f.word())},
                     {"u", format_word(f.u)},
                     {"blocks", std::move(blocks)}};
}

void from_json(const nlohmann::json& j, MultiFactorization& f) {
  f.lemma = parse_lemma(j.at("lemma").get<std::string>());
  f.u = word_field(j, "u");
  f.blocks.clear();
  for (const auto& b : j.at("blocks")) {
    f.blocks.push_back(Block{word_field(b, "v"), word_field(b, "w"), word_field(b, "x"),
                             word_field(b, "y")});
  }
  if (j.contains("word") && word_field(j, "word") != f.word()) {
    throw Error(ErrorKind::Usage, "factorization parts do not concatenate to its word");
  }
}

}  // namespace pumplab
