#pragma once

// Normal forms of complex elliptic curves, their branch points, and
// conversions among them certified through the J-invariant.

#include <optional>
#include <string_view>
#include <variant>

#include "fourpoint/moebius.hpp"
#include "fourpoint/numerics.hpp"

namespace fourpoint {

/// y^2 = 4x^3 - g2 x - g3
struct Weierstrass {
  Cx g2;
  Cx g3;
};

/// y^2 = x(x - 1)(x - lambda)
struct Legendre {
  Cx lambda;
};

/// y^2 = (x^2 - 1)(k^2 x^2 - 1)
struct Jacobi {
  Cx k;
};

/// y^2 = (x^2 - a^2)(a^2 x^2 - 1)
struct Symmetric {
  Cx a;
};

/// x^2 + y^2 = a^2 + a^2 x^2 y^2
struct Edwards {
  Cx a;
};

/// x^3 + y^3 + 1 = 3k xy, equivalently y^2 = (x + k)(x^3 - 3k x^2 + 4)
struct Hesse {
  Cx k;
};

using CurveForm = std::variant<Weierstrass, Legendre, Jacobi, Symmetric, Edwards, Hesse>;

enum class FormKind { Weierstrass, Legendre, Jacobi, Symmetric, Edwards, Hesse };

FormKind kind_of(const CurveForm& form) noexcept;
std::string_view to_string(FormKind kind) noexcept;
std::optional<FormKind> parse_form_kind(std::string_view name) noexcept;

/// Throws Errc::InvariantViolation when the parameters give a singular curve.
void validate(const CurveForm& form);

/// Branch points of the degree-2 projection x, in a fixed order:
///   Weierstrass  roots of 4x^3 - g2 x - g3 sorted by (re, im), then infinity
///   Legendre     0, 1, infinity, lambda
///   Jacobi       1, -1, 1/k, -1/k
///   Symmetric    a, -1/a, -a, 1/a  (Edwards identical)
///   Hesse        roots of z^3 - 3k z^2 + 4 sorted by (re, im), then -k
FourPoints branch_points(const CurveForm& form);

/// g2, g3 of 4(x - e1)(x - e2)(x - e3) with e_i the points recentred on
/// their centroid. Throws Errc::DegenerateInput on repeated points.
Weierstrass weierstrass_from_points(Cx z1, Cx z2, Cx z3);

/// Legendre parameter of the set: its cross ratio.
Cx legendre_from_points(const FourPoints& pts);

/// phi(a) = chi(a, -1/a, -a, 1/a) = ((1 - a^2) / (1 + a^2))^2.
Cx symmetric_cross_ratio(Cx a);

/// Some a with phi(a) = lambda: s = sqrt(lambda), a^2 = (1 - s)/(1 + s),
/// principal roots, switching the sign of s if a^4 = 1 results.
/// Throws Errc::DomainError for lambda in {0, 1} or non-finite.
Cx symmetric_parameter_from_lambda(Cx lambda);

/// phi(k) = 27/4 (k (k^3 + 8) / (4 (k^3 - 1)))^3, the J-invariant of the
/// Hesse curve. Throws Errc::DomainError at k^3 = 1.
Cx hesse_phi(Cx k);

/// A Hesse parameter k with phi(k) = J(lambda): the smallest-|k| root of
/// 27 (k(k^3 + 8))^3 - 256 J (k^3 - 1)^3 away from the cube roots of unity.
/// Throws Errc::DomainError for lambda in {0, 1} and Errc::NoValidRoot if
/// no candidate verifies.
Cx hesse_from_lambda(Cx lambda);

/// J of the form's branch points.
SpherePoint j_of_form(const CurveForm& form);

/// An isomorphic curve of the requested kind.
CurveForm convert(const CurveForm& form, FormKind target);

/// True iff the J-invariants of the branch-point sets agree to 1e-8.
bool is_isomorphic(const CurveForm& lhs, const CurveForm& rhs);

}  // namespace fourpoint
