#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pumplab/ratio.hpp"
#include "pumplab/word.hpp"

namespace pumplab {

enum class Lemma {
  Regular,
  Linear,
  BarHillel,
  Thm1,        // k-rated, pump near the start of the derivation
  Thm2,        // k-rated, pump near the end
  NonlinearCf, // two independently pumped blocks
  Multilinear, // k+1 independently pumped blocks
};

std::string_view lemma_name(Lemma lemma);

/// Accepts the names printed by lemma_name plus "multilinear" for "multi".
/// Throws Error(Usage) otherwise.
Lemma parse_lemma(std::string_view name);

bool needs_ratio(Lemma lemma);
bool is_multi_block(Lemma lemma);

/// p = uvwxy. The regular lemma uses x = y = lambda.
struct Factorization {
  Lemma lemma = Lemma::BarHillel;
  Word u, v, w, x, y;
  std::optional<Ratio> k;
  std::size_t n = 0;

  Word word() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct Block {
  Word v, w, x, y;
  friend bool operator==(const Block&, const Block&) = default;
};

/// p = u v0 w0 x0 y0 ... vk wk xk yk, block j pumped by its own exponent.
struct MultiFactorization {
  Lemma lemma = Lemma::Multilinear;
  Word u;
  std::vector<Block> blocks;

  Word word() const;

  friend bool operator==(const MultiFactorization&, const MultiFactorization&) = default;
};

/// u v^i w x^i y
Word pump(const Factorization& f, std::size_t i);

/// One exponent per block.
Word pump(const MultiFactorization& f, const std::vector<std::size_t>& exponents);

void to_json(nlohmann::json& j, const Factorization& f);
void from_json(const nlohmann::json& j, Factorization& f);
void to_json(nlohmann::json& j, const MultiFactorization& f);
void from_json(const nlohmann::json& j, MultiFactorization& f);

}  // namespace pumplab
