#include "z4cb/error.hpp"

namespace z4cb {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrimitiveInput: return "NonPrimitiveInput";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::BadTower: return "BadTower";
    case ErrorKind::OddDefect: return "OddDefect";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace z4cb
