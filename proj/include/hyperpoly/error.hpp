#ifndef HYPERPOLY_ERROR_HPP
#define HYPERPOLY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperpoly {

// Stable error codes. The numeric values are part of the CLI contract
// (printed in JSON error reports) and must not be renumbered.
enum class ErrorCode : int {
  ParseError = 10,
  TooFewEdges = 11,
  NonPositiveLength = 12,
  NonGenericAlpha = 13,
  DimensionMismatch = 14,
  EmptySubset = 15,
  FullSubset = 16,
  DegreeBoundExceeded = 20,
  RingMismatch = 21,
  NotHomogeneous = 22,
  NotDivisible = 23,
  NotShort = 30,
  SubsetTooSmall = 31,
  RequiresOneInS = 32,
  NotProper = 33,
  IndexOutOfRange = 34,
  NotASurface = 40,
  DegenerateTopDegree = 41,
  BasisNotIndependent = 42,
  SingularGroupElement = 50,
  PreconditionViolated = 51,
  ConditionViolated = 52,
  ZeroW = 53,
  ClaimViolation = 90,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::NonGenericAlpha: return "NonGenericAlpha";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::FullSubset: return "FullSubset";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotShort: return "NotShort";
    case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::RequiresOneInS: return "RequiresOneInS";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::DegenerateTopDegree: return "DegenerateTopDegree";
    case ErrorCode::BasisNotIndependent: return "BasisNotIndependent";
    case ErrorCode::SingularGroupElement: return "SingularGroupElement";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::ZeroW: return "ZeroW";
    case ErrorCode::ClaimViolation: return "ClaimViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A checked mathematical identity failed. Carries a human-readable witness.
class ClaimViolation : public Error {
 public:
  explicit ClaimViolation(const std::string& what) : Error(ErrorCode::ClaimViolation, what) {}
};

}  // namespace hyperpoly

#endif  // HYPERPOLY_ERROR_HPP
