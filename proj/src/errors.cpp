#include "disc24/errors.hpp"

namespace disc24 {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidGlue: return "InvalidGlue";
    case ErrorCode::NotIntegralPairing: return "NotIntegralPairing";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooManyHypersurfaces: return "TooManyHypersurfaces";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::BadMonomial: return "BadMonomial";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::ExhaustedDomain: return "ExhaustedDomain";
    case ErrorCode::CenterOnImage: return "CenterOnImage";
    case ErrorCode::RankNotStabilized: return "RankNotStabilized";
    case ErrorCode::NotIdentified: return "NotIdentified";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::SpanNotPlane: return "SpanNotPlane";
    case ErrorCode::ContainmentFails: return "ContainmentFails";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace disc24
