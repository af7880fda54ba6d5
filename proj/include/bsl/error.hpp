#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsl {

// Machine-readable failure codes; the CLI prints them verbatim and maps every
// Error to exit status 1.
enum class ErrorCode {
  ParseError,
  FileNotFound,
  DegreeViolation,
  OrderZero,
  EigenvalueCollision,
  CapExceeded,
  IndexError,
  DimensionMismatch,
  SingularPivot,
  SingularTruncation,
  PaddingInsufficient,
  ZeroGamma,
  ParityError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::OrderZero: return "OrderZero";
    case ErrorCode::EigenvalueCollision: return "EigenvalueCollision";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::SingularTruncation: return "SingularTruncation";
    case ErrorCode::PaddingInsufficient: return "PaddingInsufficient";
    case ErrorCode::ZeroGamma: return "ZeroGamma";
    case ErrorCode::ParityError: return "ParityError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bsl
