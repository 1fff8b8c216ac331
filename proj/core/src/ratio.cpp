#include "pumplab/ratio.hpp"

#include <charconv>
#include <numeric>

#include "pumplab/error.hpp"

namespace pumplab {

Ratio::Ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorKind::Usage, "ratio denominator must be positive");
  auto d = std::gcd(num, den);  // gcd(0, h) = h, so 0/h reduces to 0/1
  num_ = num / d;
  den_ = den / d;
}

namespace {

std::uint64_t parse_count(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::Usage, "malformed ratio '" + std::string(whole) + "', expected G/H");
  }
  return value;
}

}  // namespace

Ratio Ratio::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(parse_count(text, text), 1);
  return Ratio(parse_count(text.substr(0, slash), text),
               parse_count(text.substr(slash + 1), text));
}

std::string Ratio::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace pumplab
