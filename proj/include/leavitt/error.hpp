#pragma once

#include <stdexcept>
#include <string>

namespace leavitt {

enum class ErrorCode {
  NotCoprime,
  RequiresReduction,
  ArityMismatch,
  DimensionMismatch,
  OutOfRange,
  NotDivisible,
  NotHomogeneous,
  LevelTooSmall,
  EmptyConstruction,
  InvalidPlacement,
  ParseError,
  InvalidArgument,
  CertificateMismatch,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leavitt
