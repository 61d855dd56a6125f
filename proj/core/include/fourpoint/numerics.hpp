#pragma once

// Complex and Riemann-sphere arithmetic, polynomials and root solvers.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace fourpoint {

using Cx = std::complex<double>;

/// Default absolute/relative tolerance used throughout the library.
inline constexpr double kDefaultTol = 1e-9;

/// Tolerance for the nondegeneracy checks of curve parameters.
inline constexpr double kInvariantTol = 1e-10;

/// The primitive cube root of unity exp(2*pi*i/3).
inline const Cx kRho{-0.5, std::numbers::sqrt3 / 2.0};
/// rho squared, i.e. exp(-2*pi*i/3).
inline const Cx kRho2{-0.5, -std::numbers::sqrt3 / 2.0};

/// True when both components are finite.
bool is_finite(Cx z) noexcept;

/// |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(Cx a, Cx b, double tol = kDefaultTol) noexcept;

/// Principal square root, argument in (-pi/2, pi/2].
Cx principal_sqrt(Cx z) noexcept;

/// Principal cube root, argument in (-pi/3, pi/3].
Cx principal_cbrt(Cx z) noexcept;

/// A point of the Riemann sphere: a finite complex number or infinity.
class SpherePoint {
 public:
  /// Constructs the finite point 0.
  SpherePoint() = default;
  /// Throws Errc::DomainError when either component is NaN or infinite.
  SpherePoint(Cx z);  // NOLINT(google-explicit-constructor)
  SpherePoint(double x) : SpherePoint(Cx{x, 0.0}) {}  // NOLINT

  static SpherePoint infinity() noexcept {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// The finite value; throws Errc::DomainError at infinity.
  Cx value() const;

  /// Optional view of the finite value.
  std::optional<Cx> finite() const noexcept {
    if (infinite_) return std::nullopt;
    return value_;
  }

 private:
  Cx value_{};
  bool infinite_ = false;
};

/// Chordal distance on the unit-diameter Riemann sphere, in [0, 1].
double chordal_distance(const SpherePoint& p, const SpherePoint& q) noexcept;

/// Equality up to chordal distance `tol`.
bool approx_equal(const SpherePoint& p, const SpherePoint& q, double tol = kDefaultTol) noexcept;

/// Polynomial with complex coefficients stored in ascending degree.
///
/// Exact zero leading coefficients are trimmed on construction so the
/// leading coefficient is always nonzero (except for the zero polynomial,
/// which is stored as the single coefficient 0).
class Polynomial {
 public:
  Polynomial() : coeffs_{Cx{0.0}} {}
  explicit Polynomial(std::vector<Cx> ascending);
  Polynomial(std::initializer_list<Cx> ascending) : Polynomial(std::vector<Cx>(ascending)) {}

  /// Monic polynomial with the given roots.
  static Polynomial from_roots(std::span<const Cx> roots);
  static Polynomial monomial(std::size_t degree, Cx coefficient = 1.0);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const Cx> coeffs() const noexcept { return coeffs_; }
  Cx coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Cx{0.0}; }
  Cx leading() const noexcept { return coeffs_.back(); }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Cx{0.0}; }
  double max_coeff_magnitude() const noexcept;

  /// Horner evaluation.
  Cx operator()(Cx z) const noexcept;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(Cx scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, Cx scalar) { return lhs *= scalar; }
  friend Polynomial operator*(Cx scalar, Polynomial rhs) { return rhs *= scalar; }

  Polynomial pow(unsigned exponent) const;

 private:
  void trim();
  std::vector<Cx> coeffs_;
};

/// Backward-error style residual of a candidate root:
/// |p(r)| / ((1 + max|c_i|) * max(1, |r|)^deg).
double relative_residual(const Polynomial& p, Cx root) noexcept;

inline constexpr std::size_t kMaxSolverDegree = 12;
inline constexpr int kSolverIterationBudget = 1000;

/// All roots of `p` with multiplicity, by simultaneous (Aberth-Ehrlich)
/// iteration from a seeded perturbed circle. Roots are returned sorted by
/// (re, im). Throws Errc::UnsupportedDegree outside 1..12 and
/// Errc::NonConvergence if some root misses the residual bound `tol`.
std::vector<Cx> solve_poly(const Polynomial& p, double tol = kDefaultTol);

/// Branch selection for the explicit Hesse-cubic root formula.
struct CardanoBranch {
  int sqrt_sign = +1;    ///< +1 principal square root, -1 its negative
  int cbrt_index = 0;    ///< principal cube root times rho^cbrt_index

  /// Throws Errc::DomainError for out-of-range fields.
  void validate() const;

  /// The six combinations, principal branch first.
  static std::array<CardanoBranch, 6> all() noexcept;
};

/// The cubic z^3 - 3k z^2 + 4.
Polynomial hesse_cubic(Cx k);

/// Roots of z^3 - 3k z^2 + 4 from the Cardano-type closed form
///   z_v = k - rho^v a - k^2 / (rho^v a),  a^3 = 2 - k^3 + 2i sqrt(k^3 - 1).
/// Throws Errc::DomainError when k^3 = 1 and Errc::DegenerateAlpha when
/// |a| < 1e-8 (1 + |k|^2).
std::array<Cx, 3> hesse_roots(Cx k, CardanoBranch branch = {});

/// hesse_roots with the principal branch, falling back to solve_poly when
/// the closed form degenerates. Roots sorted by (re, im).
std::array<Cx, 3> hesse_roots_or_solve(Cx k);

/// Discriminant of a quadratic or cubic a(x - r1)...(x - rn), normalized as
/// a^2 * prod_{i<j} (ri - rj)^2. For quadratics this is b^2 - 4ac; for
/// 4x^3 - g2 x - g3 it is g2^3 - 27 g3^2. Throws Errc::UnsupportedDegree.
Cx discriminant(const Polynomial& p);

/// Sort helper: lexicographic on (re, im).
void sort_lexicographic(std::span<Cx> values) noexcept;

}  // namespace fourpoint
