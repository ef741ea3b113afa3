#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aqar {

enum class ErrorCode {
  NotCoprime,
  BadModulus,
  NotPrime,
  LimitExceeded,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  DegreeMismatch,
  NotTransitive,
  SingularGenerator,
  CharacteristicConflict,
  NotNormal,
  NoSystemFound,
  NotPrimitive,
  NotInVariety,
  NotHomomorphism,
  DegreeLimit,
  SamePrime,
  InvalidParams,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above so the
/// CLI can map it onto a report entry instead of a bare message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aqar
