#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divalg {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  HeuristicInconclusive,
  AlgebraMismatch,
  ResultNotInBaseField,
  NotInvertible,
  NonCommutative,
  DegreeOverflow,
  NotMaximalOrder,
  NoBalancedProduct,
  NotNormal,
  SearchBoundExceeded,
  NotAUnit,
  BoundExceeded,
  NotCentral,
  NonTorsionPairingValue,
  StabilityCheckFailed,
  CrossCheckFailed,
  CatalogError,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace divalg
