#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heffter {

enum class ErrorCode {
  NotPrime,
  Overflow,
  DivisionByZero,
  ZeroElement,
  NoSuchOrder,
  InvalidElement,
  BadParameters,
  WrongOrder,
  GroupMismatch,
  NotTotallyFilled,
  DomainMismatch,
  NotCompatible,
  IncompleteCover,
  ZeroDifference,
  NonIntegerGenus,
  NotBijection,
  TooLarge,
  VerificationFailed,
  NotClosed,
  BudgetExceeded,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NoSuchOrder: return "NoSuchOrder";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotTotallyFilled: return "NotTotallyFilled";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::IncompleteCover: return "IncompleteCover";
    case ErrorCode::ZeroDifference: return "ZeroDifference";
    case ErrorCode::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace heffter
