#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace disc24 {

enum class ErrorCode {
  InvalidArgument,
  NonSymmetric,
  DimensionMismatch,
  UnknownName,
  InvalidGlue,
  NotIntegralPairing,
  NotEven,
  NotDefinite,
  Degenerate,
  TooLarge,
  TooManyHypersurfaces,
  ParityViolation,
  NonIntegralGenus,
  BadMonomial,
  InvalidPrime,
  ExhaustedDomain,
  CenterOnImage,
  RankNotStabilized,
  NotIdentified,
  NotTransverse,
  SpanNotPlane,
  ContainmentFails,
  RetriesExhausted,
  EnumerationTooLarge,
  ConfigError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace disc24
