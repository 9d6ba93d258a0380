#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxeter {

/// Failure categories raised by the engine. The CLI prints `name(kind)`
/// on stderr, so the spelling of each name is part of the interface.
enum class ErrorKind {
  InvalidMatrix,
  IncompatibleOrder,
  DivisionByZero,
  MixedFields,
  DimensionMismatch,
  UnknownGenerator,
  MixedSystems,
  RootSignViolation,
  NotARoot,
  SupportNotContained,
  StepCapExceeded,
  RetryCapExceeded,
  GroupNotFinite,
  NotAParabolic,
  ParseError,
};

constexpr std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::MixedSystems: return "MixedSystems";
    case ErrorKind::RootSignViolation: return "RootSignViolation";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::SupportNotContained: return "SupportNotContained";
    case ErrorKind::StepCapExceeded: return "StepCapExceeded";
    case ErrorKind::RetryCapExceeded: return "RetryCapExceeded";
    case ErrorKind::GroupNotFinite: return "GroupNotFinite";
    case ErrorKind::NotAParabolic: return "NotAParabolic";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coxeter
