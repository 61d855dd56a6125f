#pragma once

// Moebius and affine maps, cross ratios and their orbits, and the Klein
// four-group acting on a 4-point set.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fourpoint/numerics.hpp"

namespace fourpoint {

/// Minimum chordal separation for points to count as distinct.
inline constexpr double kDistinctTol = 1e-10;

/// z -> (a z + b) / (c z + d), stored scaled so the largest coefficient is 1.
class MoebiusMap {
 public:
  /// Throws Errc::DegenerateInput when ad - bc vanishes (|det| <= 1e-12
  /// after normalization).
  MoebiusMap(Cx a, Cx b, Cx c, Cx d);

  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// z -> a z + b with a != 0.
  static MoebiusMap affine(Cx a, Cx b) { return {a, b, 0.0, 1.0}; }

  Cx a() const noexcept { return a_; }
  Cx b() const noexcept { return b_; }
  Cx c() const noexcept { return c_; }
  Cx d() const noexcept { return d_; }
  Cx determinant() const noexcept { return a_ * d_ - b_ * c_; }
  bool is_affine() const noexcept { return c_ == Cx{0.0}; }

  SpherePoint operator()(const SpherePoint& p) const noexcept;

  MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  /// Composition: (f * g)(z) = f(g(z)).
  friend MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
    return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
            f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_};
  }

  /// Coefficient-wise comparison of the normalized representatives.
  bool approx_equal(const MoebiusMap& other, double tol = kDefaultTol) const noexcept;

 private:
  Cx a_, b_, c_, d_;
};

SpherePoint apply(const MoebiusMap& m, const SpherePoint& p) noexcept;

/// The unique map sending p -> 0, q -> 1, r -> infinity.
/// Throws Errc::DegenerateTriple if two of the points coincide.
MoebiusMap map_from_triple(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r);

/// Ordered quadruple of pairwise distinct sphere points.
class FourPoints {
 public:
  /// Throws Errc::DegenerateInput if two points are closer than kDistinctTol.
  FourPoints(SpherePoint p1, SpherePoint p2, SpherePoint p3, SpherePoint p4);
  explicit FourPoints(std::array<SpherePoint, 4> points)
      : FourPoints(points[0], points[1], points[2], points[3]) {}

  const SpherePoint& operator[](std::size_t i) const { return points_.at(i); }
  std::span<const SpherePoint, 4> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains_infinity() const noexcept;
  /// Reordered copy: result[i] = (*this)[order[i]].
  FourPoints permuted(const std::array<std::size_t, 4>& order) const;
  /// Image under a Moebius map.
  FourPoints mapped(const MoebiusMap& m) const;

 private:
  std::array<SpherePoint, 4> points_;
};

/// chi(z1,z2,z3,z4) = (z4-z1)(z2-z3) / ((z1-z2)(z3-z4)), the image of z4
/// under map_from_triple(z1,z2,z3). Infinite inputs use the limit form.
/// Throws Errc::DegenerateInput unless the points are pairwise distinct.
Cx cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
               const SpherePoint& z4);
Cx cross_ratio(const FourPoints& pts);

/// The values equivalent to a cross ratio under reordering of the points.
class CrossRatioOrbit {
 public:
  explicit CrossRatioOrbit(std::vector<Cx> values) : values_(std::move(values)) {}

  std::span<const Cx> values() const& noexcept { return values_; }
  std::span<const Cx> values() const&& = delete;  // would dangle
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(Cx value, double tol = kDefaultTol) const noexcept;

 private:
  std::vector<Cx> values_;
};

/// {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l}, deduplicated to 1e-9.
/// Throws Errc::DomainError for l in {0, 1}.
CrossRatioOrbit cross_ratio_orbit(Cx lambda);

/// The six substitutions generating the orbit, in the order listed above.
std::array<Cx, 6> orbit_substitutions(Cx lambda) noexcept;

struct Canonicalization {
  Cx lambda;
  MoebiusMap map;  ///< sends (p1, p2, p3, p4) to (0, 1, infinity, lambda)
};

Canonicalization canonicalize(const FourPoints& pts);

/// Double transpositions (12)(34), (13)(24), (14)(23) realized as Moebius
/// involutions of the set, in that order.
std::array<MoebiusMap, 3> klein_involutions(const FourPoints& pts);

struct AffineMap {
  Cx a;
  Cx b;
  Cx operator()(Cx z) const noexcept { return a * z + b; }
};

/// For sets containing infinity: an affine map taking the finite triple of
/// `from` onto the finite triple of `to` (as sets), or nullopt when the
/// sets are not Moebius equivalent. Equivalence is decided by J.
/// Throws Errc::PreconditionViolation if either set lacks infinity.
std::optional<AffineMap> affine_reduction(const FourPoints& from, const FourPoints& to);

}  // namespace fourpoint
