#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latticeq {

enum class ErrorCode {
  NonExactDivision,
  DivisionByZero,
  PartsMismatch,
  InvalidFamily,
  InvalidCharacter,
  InvalidOrder,
  NotASquarePath,
  EmptyWord,
  IndexOutOfRange,
  NotABadPath,
  WrongEndpoint,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type; the
// code is stable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latticeq
