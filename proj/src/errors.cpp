#include "swapchain/errors.hpp"

namespace swapchain {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDegreeSequence: return "InvalidDegreeSequence";
    case ErrorCode::NotGraphical: return "NotGraphical";
    case ErrorCode::SwapNotAllowed: return "SwapNotAllowed";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonAlternating: return "NonAlternating";
    case ErrorCode::CycleMismatch: return "CycleMismatch";
    case ErrorCode::DiagonalPosition: return "DiagonalPosition";
    case ErrorCode::NoCousinWitness: return "NoCousinWitness";
    case ErrorCode::SpecViolation: return "SpecViolation";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::PairingMismatch: return "PairingMismatch";
    case ErrorCode::TooManyPairings: return "TooManyPairings";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateChain: return "DegenerateChain";
    case ErrorCode::NonMixing: return "NonMixing";
    case ErrorCode::MarginMismatch: return "MarginMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace swapchain
