#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rqi {

enum class ErrorCode {
  not_hermitian,
  no_convergence,
  unknown_subsystem,
  dimension_mismatch,
  not_density_matrix,
  unknown_mode,
  no_solution,
  unnormalized_state,
  residual_occupation,
  unsupported_state,
  negative_omega,
  out_of_range,
  not_one_qubit,
  not_two_qubit,
  not_pure,
  io_error,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::unknown_subsystem: return "UnknownSubsystem";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_density_matrix: return "NotDensityMatrix";
    case ErrorCode::unknown_mode: return "UnknownMode";
    case ErrorCode::no_solution: return "NoSolution";
    case ErrorCode::unnormalized_state: return "UnnormalizedState";
    case ErrorCode::residual_occupation: return "ResidualOccupation";
    case ErrorCode::unsupported_state: return "UnsupportedState";
    case ErrorCode::negative_omega: return "NegativeOmega";
    case ErrorCode::out_of_range: return "InvalidRange";
    case ErrorCode::not_one_qubit: return "NotOneQubit";
    case ErrorCode::not_two_qubit: return "NotTwoQubit";
    case ErrorCode::not_pure: return "NotPure";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rqi
