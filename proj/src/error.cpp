#include "bestek/error.hpp"

namespace bestek {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BoundaryNotIndependent: return "BoundaryNotIndependent";
    case ErrorCode::BoundaryVertexIsolatedFromInterior: return "BoundaryVertexIsolatedFromInterior";
    case ErrorCode::EmptyBoundary: return "EmptyBoundary";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NotInteriorVertex: return "NotInteriorVertex";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidDimensionParam: return "InvalidDimensionParam";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::SingularInteriorSystem: return "SingularInteriorSystem";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WrongWeightClass: return "WrongWeightClass";
    case ErrorCode::WrongHypothesis: return "WrongHypothesis";
    case ErrorCode::InteriorNotComplete: return "InteriorNotComplete";
    case ErrorCode::InteriorCurvatureNotPositive: return "InteriorCurvatureNotPositive";
    case ErrorCode::FeasibilitySearchFailed: return "FeasibilitySearchFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(ErrorCode::ParseError,
            (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + reason),
      line_(line) {}

}  // namespace bestek
