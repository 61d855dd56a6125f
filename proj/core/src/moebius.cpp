#include "fourpoint/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fourpoint/error.hpp"
#include "fourpoint/invariants.hpp"

namespace fourpoint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::size_t pivot_index(const std::array<Cx, 4>& c) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(c[i]) > std::abs(c[best])) best = i;
  }
  return best;
}

void require_distinct(std::span<const SpherePoint> pts, Errc code) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (chordal_distance(pts[i], pts[j]) <= kDistinctTol) {
        throw Error(code, "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " coincide");
      }
    }
  }
}

}  // namespace

MoebiusMap::MoebiusMap(Cx a, Cx b, Cx c, Cx d) {
  std::array<Cx, 4> coeffs{a, b, c, d};
  for (const Cx v : coeffs) {
    if (!is_finite(v)) throw Error(Errc::DegenerateInput, "non-finite Moebius coefficient");
  }
  const Cx pivot = coeffs[pivot_index(coeffs)];
  if (pivot == Cx{0.0}) throw Error(Errc::DegenerateInput, "all Moebius coefficients vanish");
  for (Cx& v : coeffs) v /= pivot;
  a_ = coeffs[0];
  b_ = coeffs[1];
  c_ = coeffs[2];
  d_ = coeffs[3];
  if (std::abs(determinant()) <= 1e-12) {
    throw Error(Errc::DegenerateInput, "Moebius map with vanishing determinant");
  }
}

SpherePoint MoebiusMap::operator()(const SpherePoint& p) const noexcept {
  if (p.is_infinite()) {
    if (c_ == Cx{0.0}) return SpherePoint::infinity();
    return a_ / c_;
  }
  const Cx z = *p.finite();
  const Cx den = c_ * z + d_;
  if (std::abs(den) <= 16.0 * kEps * (std::abs(c_) * std::abs(z) + std::abs(d_))) {
    return SpherePoint::infinity();
  }
  const Cx w = (a_ * z + b_) / den;
  if (!is_finite(w)) return SpherePoint::infinity();
  return w;
}

bool MoebiusMap::approx_equal(const MoebiusMap& other, double tol) const noexcept {
  const std::array<Cx, 4> mine{a_, b_, c_, d_};
  const std::array<Cx, 4> theirs{other.a_, other.b_, other.c_, other.d_};
  const std::size_t k = pivot_index(mine);
  if (std::abs(theirs[k]) <= tol) return false;
  const Cx scale = mine[k] / theirs[k];
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(mine[i] - scale * theirs[i]) > tol) return false;
  }
  return true;
}

SpherePoint apply(const MoebiusMap& m, const SpherePoint& p) noexcept { return m(p); }

MoebiusMap map_from_triple(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r) {
  const std::array<SpherePoint, 3> triple{p, q, r};
  require_distinct(triple, Errc::DegenerateTriple);
  // z -> (z - p)(q - r) / ((z - r)(q - p)), with the factors involving an
  // infinite point dropped.
  if (p.is_infinite()) {
    const Cx qv = q.value(), rv = r.value();
    return {0.0, qv - rv, 1.0, -rv};
  }
  if (q.is_infinite()) {
    const Cx pv = p.value(), rv = r.value();
    return {1.0, -pv, 1.0, -rv};
  }
  if (r.is_infinite()) {
    const Cx pv = p.value(), qv = q.value();
    return {1.0, -pv, 0.0, qv - pv};
  }
  const Cx pv = p.value(), qv = q.value(), rv = r.value();
  return {qv - rv, -pv * (qv - rv), qv - pv, -rv * (qv - pv)};
}

FourPoints::FourPoints(SpherePoint p1, SpherePoint p2, SpherePoint p3, SpherePoint p4)
    : points_{p1, p2, p3, p4} {
  require_distinct(points_, Errc::DegenerateInput);
}

bool FourPoints::contains_infinity() const noexcept {
  return std::any_of(points_.begin(), points_.end(),
                     [](const SpherePoint& p) { return p.is_infinite(); });
}

FourPoints FourPoints::permuted(const std::array<std::size_t, 4>& order) const {
  return FourPoints(points_.at(order[0]), points_.at(order[1]), points_.at(order[2]),
                    points_.at(order[3]));
}

FourPoints FourPoints::mapped(const MoebiusMap& m) const {
  return FourPoints(m(points_[0]), m(points_[1]), m(points_[2]), m(points_[3]));
}

Cx cross_ratio(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3,
               const SpherePoint& z4) {
  const std::array<SpherePoint, 4> pts{z1, z2, z3, z4};
  require_distinct(pts, Errc::DegenerateInput);
  if (z1.is_infinite()) {
    const Cx b = z2.value(), c = z3.value(), d = z4.value();
    return (b - c) / (d - c);
  }
  if (z2.is_infinite()) {
    const Cx a = z1.value(), c = z3.value(), d = z4.value();
    return (d - a) / (d - c);
  }
  if (z3.is_infinite()) {
    const Cx a = z1.value(), b = z2.value(), d = z4.value();
    return (d - a) / (b - a);
  }
  if (z4.is_infinite()) {
    const Cx a = z1.value(), b = z2.value(), c = z3.value();
    return (b - c) / (b - a);
  }
  const Cx a = z1.value(), b = z2.value(), c = z3.value(), d = z4.value();
  return (d - a) * (b - c) / ((a - b) * (c - d));
}

Cx cross_ratio(const FourPoints& pts) { return cross_ratio(pts[0], pts[1], pts[2], pts[3]); }

bool CrossRatioOrbit::contains(Cx value, double tol) const noexcept {
  return std::any_of(values_.begin(), values_.end(),
                     [&](Cx v) { return fourpoint::approx_equal(v, value, tol); });
}

std::array<Cx, 6> orbit_substitutions(Cx l) noexcept {
  return {l, 1.0 / l, 1.0 - l, 1.0 / (1.0 - l), l / (l - 1.0), (l - 1.0) / l};
}

CrossRatioOrbit cross_ratio_orbit(Cx lambda) {
  if (!is_finite(lambda)) throw Error(Errc::DomainError, "cross ratio orbit of infinity");
  if (std::abs(lambda) <= kInvariantTol || std::abs(lambda - 1.0) <= kInvariantTol) {
    throw Error(Errc::DomainError, "cross ratio orbit undefined for lambda in {0, 1}");
  }
  std::vector<Cx> values;
  for (const Cx v : orbit_substitutions(lambda)) {
    const bool seen = std::any_of(values.begin(), values.end(),
                                  [&](Cx w) { return fourpoint::approx_equal(v, w, kDefaultTol); });
    if (!seen) values.push_back(v);
  }
  return CrossRatioOrbit(std::move(values));
}

Canonicalization canonicalize(const FourPoints& pts) {
  return {cross_ratio(pts), map_from_triple(pts[0], pts[1], pts[2])};
}

std::array<MoebiusMap, 3> klein_involutions(const FourPoints& pts) {
  // Each involution is determined by the images of the first three points.
  constexpr std::array<std::array<std::size_t, 3>, 3> images{{{1, 0, 3}, {2, 3, 0}, {3, 2, 1}}};
  const MoebiusMap source = map_from_triple(pts[0], pts[1], pts[2]);
  std::array<MoebiusMap, 3> out{MoebiusMap::identity(), MoebiusMap::identity(),
                                MoebiusMap::identity()};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& img = images[i];
    const MoebiusMap target = map_from_triple(pts[img[0]], pts[img[1]], pts[img[2]]);
    out[i] = target.inverse() * source;
  }
  return out;
}

std::optional<AffineMap> affine_reduction(const FourPoints& from, const FourPoints& to) {
  if (!from.contains_infinity() || !to.contains_infinity()) {
    throw Error(Errc::PreconditionViolation, "affine_reduction needs infinity in both sets");
  }
  if (!j_values_equal(j_of_points(from), j_of_points(to))) return std::nullopt;

  auto finite_triple = [](const FourPoints& pts) {
    std::array<Cx, 3> out{};
    std::size_t n = 0;
    for (const auto& p : pts) {
      if (p.is_finite()) out[n++] = p.value();
    }
    return out;
  };
  const auto z = finite_triple(from);
  const auto w = finite_triple(to);
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    const Cx a = (w[perm[1]] - w[perm[0]]) / (z[1] - z[0]);
    const Cx b = w[perm[0]] - a * z[0];
    const Cx image = a * z[2] + b;
    const double scale = std::max({1.0, std::abs(w[perm[2]]), std::abs(image)});
    if (std::abs(image - w[perm[2]]) <= 1e-8 * scale) return AffineMap{a, b};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace fourpoint
