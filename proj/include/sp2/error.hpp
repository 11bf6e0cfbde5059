#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sp2 {

enum class ErrorCode {
  DescriptorMismatch,
  NotPositive,
  NotInvertible,
  NotUnitary,
  MembershipDrift,
  SingularDenominator,
  NotTransverse,
  NotMaximal,
  NotPositiveQuadruple,
  DegenerateLine,
  InvalidSurface,
  DisconnectedDomain,
  BadPairing,
  EulerMismatch,
  Unreachable,
  CycleClosureFailure,
  DomainMismatch,
  UnknownGenerator,
  SizeMismatch,
  ParseError,
  VerificationFailed,
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

}  // namespace sp2
