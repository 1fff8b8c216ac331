#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pumplab {

enum class ErrorKind {
  Usage,
  InvalidGrammar,
  NotInClass,
  EmptyLanguage,
  WordTooShort,
  NotInLanguage,
  CapExceeded,
  Inconclusive,
  UnknownOracle,
  MalformedPattern,
  FamilyUnusable,
  LemmaMismatch,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pumplab
