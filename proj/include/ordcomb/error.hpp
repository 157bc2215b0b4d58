#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordcomb {

enum class ErrorCode {
  InvalidElement,
  InvalidOrder,
  InvalidTerm,
  NotMonotone,
  OutOfRange,
  NotStabilized,
  WindowExhausted,
  InvalidArray,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the text parsers; `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string_view input);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// "LT", "EQ" or "GT".
std::string_view to_string(std::strong_ordering ord);

inline std::strong_ordering reverse(std::strong_ordering ord) {
  return 0 <=> ord;
}

}  // namespace ordcomb
