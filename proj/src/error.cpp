#include "ordcomb/error.hpp"

namespace ordcomb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::WindowExhausted: return "WindowExhausted";
    case ErrorCode::InvalidArray: return "InvalidArray";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t position, std::string expected,
                       std::string_view input)
    : Error(ErrorCode::Parse,
            "parse error at position " + std::to_string(position) +
                ": expected " + expected + " in '" + std::string(input) + "'"),
      position_(position),
      expected_(std::move(expected)) {}

std::string_view to_string(std::strong_ordering ord) {
  if (ord < 0) return "LT";
  if (ord > 0) return "GT";
  return "EQ";
}

}  // namespace ordcomb
