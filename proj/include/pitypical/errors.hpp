#pragma once

#include <stdexcept>
#include <string>

namespace pityp {

enum class ErrorCode {
  NotEisenstein,
  ReducibleResidual,
  BadPrecision,
  SpecMismatch,
  NotDivisible,
  NotUnit,
  NonzeroConstant,
  BadLinearTerm,
  BadFrobeniusReduction,
  DivisionObstruction,
  IntegralityFailure,
  CertificateFailure,
  OutOfRange,
  MismatchAgainstQnPlus1,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotEisenstein: return "NotEisenstein";
    case ErrorCode::ReducibleResidual: return "ReducibleResidual";
    case ErrorCode::BadPrecision: return "BadPrecision";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NonzeroConstant: return "NonzeroConstant";
    case ErrorCode::BadLinearTerm: return "BadLinearTerm";
    case ErrorCode::BadFrobeniusReduction: return "BadFrobeniusReduction";
    case ErrorCode::DivisionObstruction: return "DivisionObstruction";
    case ErrorCode::IntegralityFailure: return "IntegralityFailure";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MismatchAgainstQnPlus1: return "MismatchAgainstQnPlus1";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace pityp
