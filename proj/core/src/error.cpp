#include "fourpoint/error.hpp"

namespace fourpoint {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::DegenerateAlpha: return "DegenerateAlpha";
    case Errc::DomainError: return "DomainError";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::DegenerateTriple: return "DegenerateTriple";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::NoValidRoot: return "NoValidRoot";
    case Errc::VerificationFailure: return "VerificationFailure";
    case Errc::ConcyclicInput: return "ConcyclicInput";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fourpoint
