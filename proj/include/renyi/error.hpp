#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

enum class ErrorCode {
  AlphabetMismatch,
  SupportViolation,
  SizeCap,
  InfeasibleTarget,
  NotAType,
  TypicalSetEmpty,
  DegenerateInput,
  InvalidArgument,
  ModelValidation,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace renyi
