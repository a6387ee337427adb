#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specfactor {

enum class ErrorCode {
  DivisionByZero,
  InvalidArgument,
  DimensionMismatch,
  RankDeficient,
  CirclePoint,
  NonGaussianRoot,
  NotParaUnitary,
  PeelFailure,
  NotSpectralFactor,
  NotCoSpectral,
  HypothesisViolated,
  RetryExhausted,
  MalformedInput,
  IoError,
};

/// Stable identifier used in structured error output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace specfactor
