#include "koebe/errors.hpp"

namespace koebe {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DivisionByZeroConstantTerm: return "DivisionByZeroConstantTerm";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DilatationOutOfRange: return "DilatationOutOfRange";
    case ErrorCode::DegenerateJet: return "DegenerateJet";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::ResolutionInsufficient: return "ResolutionInsufficient";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace koebe
