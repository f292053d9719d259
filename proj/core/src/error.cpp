#include "pdemlab/error.hpp"

namespace pdemlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NonPositiveMass: return "NonPositiveMass";
    case ErrorCode::DerivativeMismatch: return "DerivativeMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::PoleDetected: return "PoleDetected";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::EigensolveFailure: return "EigensolveFailure";
    case ErrorCode::NonNormalizable: return "NonNormalizable";
  }
  return "Unknown";
}

int exit_status_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ConfigError:
    case ErrorCode::ParityViolation:
    case ErrorCode::NonPositiveMass:
    case ErrorCode::DerivativeMismatch:
    case ErrorCode::DomainError:
    case ErrorCode::GridMismatch:
      return 2;
    case ErrorCode::QuadratureNonConvergence:
    case ErrorCode::PoleDetected:
    case ErrorCode::ResidualTooLarge:
    case ErrorCode::EigensolveFailure:
      return 3;
    case ErrorCode::NonNormalizable:
      return 4;
  }
  return 3;
}

}  // namespace pdemlab
