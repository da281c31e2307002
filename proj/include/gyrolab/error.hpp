#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gyrolab {

enum class ErrorCode {
  InvalidArgument,
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NotABijection,
  OrderCapExceeded,
  UnknownSpec,
  NotASubgroup,
  NotNormal,
  NotRightLoop,
  NotALoop,
  NotASubloop,
  NotWellDefined,
  WrongClass,
  NotCentral,
  ValueOutsideCenter,
  DimensionMismatch,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::UnknownSpec: return "UnknownSpec";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotRightLoop: return "NotRightLoop";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::NotASubloop: return "NotASubloop";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::ValueOutsideCenter: return "ValueOutsideCenter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code and a
/// message naming the first offending cell, triple or field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gyrolab
