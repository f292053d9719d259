#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdemlab {

/// Failure categories raised by the pipeline. The CLI maps these onto exit
/// statuses, so new codes must be added to `exit_status_for` as well.
enum class ErrorCode {
  InvalidArgument,
  ConfigError,
  ParityViolation,
  NonPositiveMass,
  DerivativeMismatch,
  DomainError,
  GridMismatch,
  QuadratureNonConvergence,
  PoleDetected,
  ResidualTooLarge,
  EigensolveFailure,
  NonNormalizable,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// 2 for validation problems, 3 for numerical failures, 4 for NonNormalizable.
int exit_status_for(ErrorCode code) noexcept;

}  // namespace pdemlab
