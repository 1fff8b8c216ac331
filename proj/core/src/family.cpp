#include "pumplab/family.hpp"

#include <cctype>

#include "pumplab/error.hpp"

namespace pumplab {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

class AffineParser {
 public:
  AffineParser(std::string_view src, std::string_view whole) : src_(src), whole_(whole) {}

  Affine parse() {
    auto v = sum();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedPattern, "exponent '" + std::string(whole_) + "': " + why);
  }
  bool at(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  Affine sum() {
    auto v = product();
    while (at('+')) {
      ++pos_;
      auto r = product();
      v = {v.a + r.a, v.b + r.b};
    }
    return v;
  }

  Affine product() {
    auto v = factor();
    // Juxtaposition multiplies too: 3(n+2), 2n.
    while (at('*') || at('(') || at('n') ||
           (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))) {
      if (at('*')) ++pos_;
      auto r = factor();
      if (v.a != 0 && r.a != 0) fail("not affine in n");
      v = {v.a * r.b + r.a * v.b, v.b * r.b};
    }
    return v;
  }

  Affine factor() {
    if (at('(')) {
      ++pos_;
      auto v = sum();
      if (!at(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    if (at('n')) {
      ++pos_;
      return {1, 0};
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      std::uint64_t v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + static_cast<std::uint64_t>(src_[pos_++] - '0');
      }
      return {0, v};
    }
    fail(pos_ < src_.size() ? "unexpected '" + std::string(1, src_[pos_]) + "'"
                            : std::string("unexpected end"));
  }

  std::string_view src_;
  std::string_view whole_;
  std::size_t pos_ = 0;
};

}  // namespace

Affine parse_affine(std::string_view text) {
  auto src = strip_spaces(text);
  if (src.empty()) throw Error(ErrorKind::MalformedPattern, "empty exponent");
  return AffineParser(src, text).parse();
}

WitnessFamily WitnessFamily::parse(std::string_view text) {
  const auto src = strip_spaces(text);
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::MalformedPattern, "family '" + std::string(text) + "': " + why);
  };

  WitnessFamily f;
  f.description_ = std::string(text);
  std::size_t pos = 0;
  while (pos < src.size()) {
    Segment seg;
    if (src[pos] == '{') {
      auto close = src.find('}', pos);
      if (close == std::string::npos) fail("missing '}'");
      for (std::size_t i = pos + 1; i < close; ++i) seg.block.emplace_back(1, src[i]);
      if (seg.block.empty()) fail("empty {} group");
      pos = close + 1;
    } else if (src[pos] == '^') {
      fail("'^' without a literal");
    } else {
      seg.block.emplace_back(1, src[pos++]);
    }
    seg.exponent = {0, 1};
    if (pos < src.size() && src[pos] == '^') {
      ++pos;
      if (pos < src.size() && src[pos] == '(') {
        // Find the matching parenthesis of the exponent.
        int depth = 0;
        std::size_t end = pos;
        for (; end < src.size(); ++end) {
          if (src[end] == '(') ++depth;
          if (src[end] == ')' && --depth == 0) break;
        }
        if (end == src.size()) fail("unbalanced exponent");
        seg.exponent = parse_affine(std::string_view(src).substr(pos, end - pos + 1));
        pos = end + 1;
      } else {
        std::size_t end = pos;
        while (end < src.size() && (std::isdigit(static_cast<unsigned char>(src[end])) || src[end] == 'n')) {
          ++end;
        }
        if (end == pos) fail("missing exponent after '^'");
        seg.exponent = parse_affine(std::string_view(src).substr(pos, end - pos));
        pos = end;
      }
    }
    f.segments_.push_back(std::move(seg));
  }
  bool grows = false;
  for (const auto& s : f.segments_) grows = grows || s.exponent.a > 0;
  if (!grows) fail("no exponent depends on n");
  return f;
}

std::vector<std::string> WitnessFamily::named_families() { return {"evenlin-square"}; }

WitnessFamily WitnessFamily::named(std::string_view name) {
  if (name == "evenlin-square") {
    WitnessFamily f;
    f.description_ = "a^2 b a^((2n+5)^2) b^3";
    f.fn_ = [](std::uint64_t n) {
      const auto side = 2 * n + 5;
      Word w = repeat({"a"}, 2);
      w.push_back("b");
      append(w, {"a"}, side * side);
      append(w, {"b"}, 3);
      return w;
    };
    return f;
  }
  throw Error(ErrorKind::Usage, "unknown family '" + std::string(name) + "'");
}

Word WitnessFamily::instantiate(std::uint64_t n) const {
  if (fn_) return fn_(n);
  Word w;
  for (const auto& s : segments_) append(w, s.block, s.exponent.at(n));
  return w;
}

}  // namespace pumplab
