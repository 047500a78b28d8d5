#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyeq {

enum class ErrorCode {
  InvalidPoint,
  InvalidCircle,
  DegenerateLine,
  DegenerateRay,
  InvalidN,
  InvalidRadius,
  CoincidentVertexCentroid,
  DegenerateSide,
  NotOnCircumcircle,
  OrderOutOfRange,
  LengthMismatch,
  MixedN,
  NoIntersection,
  NoMatching,
  NotSharedVertex,
  NotTwoPointSolution,
  DegenerateTriangle,
  InvalidSides,
  ParseError,
  ValidationError,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::InvalidCircle: return "InvalidCircle";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::CoincidentVertexCentroid: return "CoincidentVertexCentroid";
    case ErrorCode::DegenerateSide: return "DegenerateSide";
    case ErrorCode::NotOnCircumcircle: return "NotOnCircumcircle";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MixedN: return "MixedN";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::NoMatching: return "NoMatching";
    case ErrorCode::NotSharedVertex: return "NotSharedVertex";
    case ErrorCode::NotTwoPointSolution: return "NotTwoPointSolution";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::InvalidSides: return "InvalidSides";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

// Every library failure is reported through this type; code() identifies the
// precondition that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polyeq
