#include "cubicstring/error.hpp"

namespace cubicstring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse: return "Parse";
  case ErrorKind::NonSquare: return "NonSquare";
  case ErrorKind::SingularMatrix: return "SingularMatrix";
  case ErrorKind::NotSquarefree: return "NotSquarefree";
  case ErrorKind::ZeroDenominator: return "ZeroDenominator";
  case ErrorKind::EmptyString: return "EmptyString";
  case ErrorKind::NonPositiveMass: return "NonPositiveMass";
  case ErrorKind::NonPositiveGap: return "NonPositiveGap";
  case ErrorKind::StepsOutOfRange: return "StepsOutOfRange";
  case ErrorKind::IdentityViolated: return "IdentityViolated";
  case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
  case ErrorKind::TooSmall: return "TooSmall";
  case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
  case ErrorKind::InvalidSpectralData: return "InvalidSpectralData";
  case ErrorKind::NonPositiveRecovery: return "NonPositiveRecovery";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::ZeroSupportPoint: return "ZeroSupportPoint";
  case ErrorKind::OrderingViolated: return "OrderingViolated";
  }
  return "Unknown";
}

} // namespace cubicstring
