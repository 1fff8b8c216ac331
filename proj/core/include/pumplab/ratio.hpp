#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pumplab {

/// Reduced non-negative rational num/den. In k-rated terms num is the suffix
/// length and den the prefix length of every rule A -> vBw.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::uint64_t num, std::uint64_t den);

  /// Parses "G/H" (or a bare integer "G", meaning G/1).
  static Ratio parse(std::string_view text);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  std::uint64_t weight() const noexcept { return num_ + den_; }

  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace pumplab
