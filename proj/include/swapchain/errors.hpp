#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swapchain {

enum class ErrorCode {
  InvalidDegreeSequence,
  NotGraphical,
  SwapNotAllowed,
  ShapeMismatch,
  DegreeMismatch,
  NonAlternating,
  CycleMismatch,
  DiagonalPosition,
  NoCousinWitness,
  SpecViolation,
  PreconditionViolation,
  PairingMismatch,
  TooManyPairings,
  TooLarge,
  DegenerateChain,
  NonMixing,
  MarginMismatch,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Domain error carrying a stable code. The CLI prints `error: <Code>: <what>`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swapchain
