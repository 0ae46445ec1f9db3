#include "x0calc/error.hpp"

namespace x0calc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquarefree: return "NonSquarefree";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegenerateGenus: return "DegenerateGenus";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::BadHeckePrime: return "BadHeckePrime";
    case ErrorCode::BadInvolutionParam: return "BadInvolutionParam";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NonBilinearProduct: return "NonBilinearProduct";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FractionalLeadingPower: return "FractionalLeadingPower";
    case ErrorCode::WeightRejected: return "WeightRejected";
    case ErrorCode::PrecisionTooSmall: return "PrecisionTooSmall";
    case ErrorCode::LevelNotCoprimeTo6: return "LevelNotCoprimeTo6";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::WrongSign: return "WrongSign";
    case ErrorCode::SignConventionMismatch: return "SignConventionMismatch";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::NegativeHeightBeyondTolerance: return "NegativeHeightBeyondTolerance";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::GridIncompatibleWithDegree: return "GridIncompatibleWithDegree";
    case ErrorCode::BoundaryNonVanishing: return "BoundaryNonVanishing";
    case ErrorCode::ClosedFormRequired: return "ClosedFormRequired";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace x0calc
