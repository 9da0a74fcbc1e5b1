#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multimult {

enum class ErrorCode {
  DimensionMismatch,
  RingMismatch,
  InvalidArgument,
  Overflow,
  NonPolynomialWindow,
  NonConstantWindow,
  NonUnitDegree,
  ConstructionFailed,
  NotDefined,
  SequenceNotFilterRegular,
  NotASystem,
  BaseNotConstant,
  Mismatch,
  NotInIdeal,
  DimTooLarge,
  ParseError,
  UndeclaredName,
  BadSlot,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the CLI
/// maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace multimult
