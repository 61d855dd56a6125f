#pragma once

// Text syntax of the command-line tool.
//
//   value := "inf" | real | imag | real sign imag | ["-"] ("rho" | "rho2")
//   real  := ["-"] digits ["." digits] [("e"|"E") ["-"] digits]
//   imag  := [real] "i"          (a bare "-i" is accepted as well)
//   sign  := "+" | "-"           (whitespace allowed around it)
//
//   form  := kind ":" params
//   kinds: weierstrass:g2,g3  legendre:l  jacobi:k  edwards:a  symmetric:a
//          hesse:k  points:z1,z2,z3[,z4]  (three points imply z4 = inf)

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "fourpoint/error.hpp"
#include "fourpoint/forms.hpp"
#include "fourpoint/moebius.hpp"

namespace fourpoint::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(Errc::ParseError, "at byte " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

SpherePoint parse_complex(std::string_view text);

/// Like parse_complex but rejects "inf".
Cx parse_finite_complex(std::string_view text);

/// Shortest-fidelity rendering with `digits` significant digits; 17 digits
/// round-trips every double.
std::string format_real(double value, int digits = 15);
std::string format_complex(Cx value, int digits = 15);
std::string format_point(const SpherePoint& value, int digits = 15);

using FormOperand = std::variant<CurveForm, FourPoints>;

/// Parses a form literal. Parameter invariants are checked (Errc::InvariantViolation).
FormOperand parse_form(std::string_view text);

std::string format_form(const CurveForm& form, int digits = 15);

}  // namespace fourpoint::cli
