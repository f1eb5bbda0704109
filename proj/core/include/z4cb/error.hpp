#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z4cb {

enum class ErrorKind {
  NonPrimitiveInput,
  ContextMismatch,
  BadTower,
  OddDefect,
  NotQuadratic,
  TooLarge,
  NotAlternating,
  NotApplicable,
  InvalidParams,
  DimensionMismatch,
  OddDimension,
  NotInvertible,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace z4cb
