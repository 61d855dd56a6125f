#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fourpoint {

enum class Errc {
  NonConvergence,
  DegenerateAlpha,
  DomainError,
  UnsupportedDegree,
  DegenerateTriple,
  DegenerateInput,
  PreconditionViolation,
  InvariantViolation,
  NoValidRoot,
  VerificationFailure,
  ConcyclicInput,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying a machine-readable error category.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fourpoint
