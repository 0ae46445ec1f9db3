#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace x0calc {

// Domain errors. The names are part of the CLI contract and are emitted verbatim.
enum class ErrorCode {
  NonSquarefree,
  NotADivisor,
  NotPrime,
  DegenerateGenus,
  BasisMismatch,
  BadHeckePrime,
  BadInvolutionParam,
  OutsideDomain,
  NonBilinearProduct,
  PrecisionUnreachable,
  ParseError,
  FractionalLeadingPower,
  WeightRejected,
  PrecisionTooSmall,
  LevelNotCoprimeTo6,
  InvariantViolation,
  InsufficientCoefficients,
  WrongSign,
  SignConventionMismatch,
  QuadratureNotConverged,
  NegativeHeightBeyondTolerance,
  GridTooCoarse,
  GridIncompatibleWithDegree,
  BoundaryNonVanishing,
  ClosedFormRequired,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace x0calc
