#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bestek {

enum class ErrorCode {
  DuplicateVertex,
  SelfLoop,
  DuplicateEdge,
  NonPositiveValue,
  Disconnected,
  UnknownVertex,
  BoundaryNotIndependent,
  BoundaryVertexIsolatedFromInterior,
  EmptyBoundary,
  EmptyInterior,
  NotInteriorVertex,
  InvalidFamilyParams,
  ParseError,
  DomainMismatch,
  InvalidDimensionParam,
  IsolatedVertex,
  InvalidParams,
  SingularInteriorSystem,
  PreconditionViolated,
  WrongWeightClass,
  WrongHypothesis,
  InteriorNotComplete,
  InteriorCurvatureNotPositive,
  FeasibilitySearchFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the condition,
/// `what()` names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the graph file reader. `line()` is 1-based for syntax errors
/// and 0 for schema errors, where `what()` carries a JSON pointer instead.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bestek
