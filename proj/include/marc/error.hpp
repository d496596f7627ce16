#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace marc {

enum class ErrorKind {
  InvalidParameter,
  NonHermitianInput,
  NoConvergence,
  DimensionMismatch,
  UnnormalizedState,
  InvalidStep,
  DegenerateModel,
  DivisionByZeroCoupling,
  ZeroCoupling,
  InvalidDensityMatrix,
  PatternMismatch,
  NonpositiveSeparation,
  CoincidentAtoms,
  ContractViolation,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnnormalizedState: return "UnnormalizedState";
    case ErrorKind::InvalidStep: return "InvalidStep";
    case ErrorKind::DegenerateModel: return "DegenerateModel";
    case ErrorKind::DivisionByZeroCoupling: return "DivisionByZeroCoupling";
    case ErrorKind::ZeroCoupling: return "ZeroCoupling";
    case ErrorKind::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::NonpositiveSeparation: return "NonpositiveSeparation";
    case ErrorKind::CoincidentAtoms: return "CoincidentAtoms";
    case ErrorKind::ContractViolation: return "ContractViolation";
  }
  return "Unknown";
}

// Numerical-contract failures, as opposed to bad user input.
constexpr bool is_numerical(ErrorKind kind) {
  return kind == ErrorKind::NoConvergence || kind == ErrorKind::NonHermitianInput ||
         kind == ErrorKind::InvalidDensityMatrix || kind == ErrorKind::ContractViolation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace marc
