#pragma once

// The J-invariant J(l) = (l^2 - l + 1)^3 / (l^2 (l - 1)^2), equivalence of
// 4-point sets, its factorization chain and its branching structure.

#include <string>
#include <variant>
#include <vector>

#include "fourpoint/moebius.hpp"
#include "fourpoint/numerics.hpp"

namespace fourpoint {

/// Default relative tolerance for comparing J values.
inline constexpr double kJTol = 1e-8;

/// J(l); infinity at l in {0, 1, infinity}. No 1728 normalization.
SpherePoint j_invariant(const SpherePoint& lambda);

/// J of the cross ratio of the set; independent of the ordering.
SpherePoint j_of_points(const FourPoints& pts);

/// J evaluated through the factorization
///   z -> (rho z + rho^2)/(z + rho^2) -> w^3 + 1/w^3 -> -27/(u - 2).
/// Throws Errc::DomainError for l in {0, 1}.
Cx j_chain(Cx lambda);

/// J'(l) from the symbolic quotient rule on the numerator/denominator
/// polynomials. Throws Errc::DomainError at the poles 0 and 1.
Cx j_derivative(Cx lambda);

/// Both infinite, or |a - b| <= rel_tol * (1 + max(|a|, |b|)).
bool j_values_equal(const SpherePoint& a, const SpherePoint& b, double rel_tol = kJTol) noexcept;

/// A 4-point set or a bare cross ratio.
using EquivalenceOperand = std::variant<FourPoints, Cx>;

/// True iff the two J values agree (relative tolerance 1e-8).
bool are_equivalent(const EquivalenceOperand& a, const EquivalenceOperand& b);

struct BranchingEntry {
  SpherePoint critical_point;
  SpherePoint critical_value;
  int multiplicity = 0;          ///< expected local degree
  double measured_slope = 0.0;   ///< log-ratio estimate of the local degree
  double derivative = 0.0;       ///< |J'| at a finite critical point with finite value, else 0
  bool passed = false;
};

struct FiberCheck {
  SpherePoint value;
  int multiplicity_sum = 0;
  bool degree_check = false;  ///< sums to 6 and the solved fiber has no other points
};

struct BranchingReport {
  std::vector<BranchingEntry> entries;
  std::vector<FiberCheck> fibers;

  bool all_passed() const noexcept;
};

/// Numerically confirms the critical points of J:
///   0, 1, infinity -> infinity (each multiplicity 2)
///   2, 1/2, -1     -> 27/4     (each multiplicity 2)
///   -rho, -rho^2   -> 0        (each multiplicity 3)
/// Throws Errc::VerificationFailure naming the first failing entry.
BranchingReport verify_branching(double tol = kJTol);

/// Same checks without throwing.
BranchingReport branching_report(double tol = kJTol);

std::string describe(const BranchingEntry& entry);

}  // namespace fourpoint
