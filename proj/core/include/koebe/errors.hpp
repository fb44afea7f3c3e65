#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace koebe {

enum class ErrorCode {
  InvalidArgument,
  DomainError,
  DivisionByZeroConstantTerm,
  OrderOverflow,
  DegenerateParameters,
  NonConvergence,
  DilatationOutOfRange,
  DegenerateJet,
  DegenerateCurve,
  ResolutionInsufficient,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; code() carries the
// category so callers (the CLI in particular) can map it to exit codes.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace koebe
