#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latcurve {

enum class ErrorKind {
  DegenerateTriangle,
  Configuration,
  ConstructionFailure,
  CircumscriptionViolation,
  PrecisionExhausted,
  NoCrossing,
  DegenerateSeries,
  SearchExhausted,
  Overflow,
  OracleMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateTriangle: return "degenerate_triangle";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::ConstructionFailure: return "construction_failure";
    case ErrorKind::CircumscriptionViolation: return "circumscription_violation";
    case ErrorKind::PrecisionExhausted: return "precision_exhausted";
    case ErrorKind::NoCrossing: return "no_crossing";
    case ErrorKind::DegenerateSeries: return "degenerate_series";
    case ErrorKind::SearchExhausted: return "search_exhausted";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::OracleMismatch: return "oracle_mismatch";
  }
  return "unknown";
}

/// Single exception type for every recoverable failure in the library; the
/// kind is what the CLI reports in its machine-readable error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latcurve
