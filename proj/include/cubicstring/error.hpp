#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicstring {

enum class ErrorKind {
  Parse,
  NonSquare,
  SingularMatrix,
  NotSquarefree,
  ZeroDenominator,
  EmptyString,
  NonPositiveMass,
  NonPositiveGap,
  StepsOutOfRange,
  IdentityViolated,
  PrecisionExhausted,
  TooSmall,
  SizeCapExceeded,
  InvalidSpectralData,
  NonPositiveRecovery,
  IndexOutOfRange,
  ZeroSupportPoint,
  OrderingViolated,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace cubicstring
