#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

enum class ErrorCode {
  IndexOutOfRange,
  LengthMismatch,
  SizeMismatch,
  DimensionMismatch,
  NotAGroup,
  Degenerate,
  NotSurjective,
  EmptyFiber,
  TooLarge,
  NotInvertible,
  Incompatible,
  Singular,
  NotInvertibleInAlgebra,
  NotBijective,
  UnsupportedName,
  BadN,
  BadSymbol,
  BadIndex,
  MissingGenerator,
  NotASolution,
  ParseError,
  FileNotFound,
};

const char* to_string(ErrorCode code);

// Single exception type for the whole library; the code tells callers (and
// the CLI exit-code mapping) what went wrong, the message carries a witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ybx
