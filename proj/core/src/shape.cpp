#include "fourpoint/shape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fourpoint/error.hpp"

namespace fourpoint {

namespace {

constexpr double kConcyclicTol = 1e-9;
constexpr double kNearConcyclicTol = 1e-6;

double concyclic_measure(const FourPoints& pts) {
  const Cx chi = cross_ratio(pts);
  return std::abs(chi.imag()) / std::max(1.0, std::abs(chi));
}

double angle_at(Cx vertex, Cx next, Cx prev) noexcept {
  return std::abs(std::arg((prev - vertex) / (next - vertex)));
}

}  // namespace

GeneralizedCircle circumcircle(Cx z1, Cx z2, Cx z3) {
  const Cx b = z2 - z1;
  const Cx c = z3 - z1;
  const double scale = std::max({1.0, std::abs(z1), std::abs(z2), std::abs(z3)});
  if (std::abs(b) <= 1e-12 * scale || std::abs(c) <= 1e-12 * scale ||
      std::abs(z3 - z2) <= 1e-12 * scale) {
    throw Error(Errc::DegenerateInput, "circumcircle needs three distinct points");
  }
  const double cross = (std::conj(b) * c).imag();
  if (std::abs(cross) <= 1e-10 * std::abs(b) * std::abs(c)) {
    return Line{z1, b / std::abs(b)};
  }
  const Cx offset = (std::norm(b) * c - std::norm(c) * b) / Cx{0.0, 2.0 * cross};
  return Circle{z1 + offset, std::abs(offset)};
}

bool on_circle(const GeneralizedCircle& gc, Cx z, double tol) noexcept {
  if (const auto* circle = std::get_if<Circle>(&gc)) {
    return std::abs(std::abs(z - circle->center) - circle->radius) <=
           tol * std::max(1.0, circle->radius);
  }
  const auto& line = std::get<Line>(gc);
  const Cx rel = z - line.point;
  return std::abs((std::conj(line.direction) * rel).imag()) <= tol * std::max(1.0, std::abs(rel));
}

bool is_concyclic(const FourPoints& pts) { return concyclic_measure(pts) <= kConcyclicTol; }

std::array<double, 3> Shape::canonical() const noexcept {
  std::array<double, 3> best = angles;
  for (std::size_t r = 1; r < 3; ++r) {
    const std::array<double, 3> rot{angles[r], angles[(r + 1) % 3], angles[(r + 2) % 3]};
    if (rot < best) best = rot;
  }
  return best;
}

Shape triangle_shape(const FourPoints& pts, std::size_t omitted) {
  if (omitted > 3) throw Error(Errc::DomainError, "omitted index must be 0..3");
  const double measure = concyclic_measure(pts);
  if (measure <= kConcyclicTol) {
    throw Error(Errc::ConcyclicInput, "the four points lie on one generalized circle");
  }

  Shape shape;
  shape.omitted = omitted;
  shape.near_concyclic = measure <= kNearConcyclicTol;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != omitted) shape.vertices[n++] = i;
  }

  // Send the omitted point to infinity; the triangle becomes Euclidean.
  const SpherePoint& pole = pts[omitted];
  std::array<Cx, 3> w{};
  for (std::size_t i = 0; i < 3; ++i) {
    const SpherePoint& p = pts[shape.vertices[i]];
    if (pole.is_infinite()) {
      w[i] = p.value();
    } else if (p.is_infinite()) {
      w[i] = 0.0;
    } else {
      w[i] = 1.0 / (p.value() - pole.value());
    }
  }

  if ((std::conj(w[1] - w[0]) * (w[2] - w[0])).imag() < 0.0) {
    std::swap(shape.vertices[1], shape.vertices[2]);
    std::swap(w[1], w[2]);
    shape.relabeled = true;
  }
  shape.angles = {angle_at(w[0], w[1], w[2]), angle_at(w[1], w[2], w[0]),
                  angle_at(w[2], w[0], w[1])};
  return shape;
}

Shape shape_of(const FourPoints& pts) { return triangle_shape(pts, 3); }

bool same_shape(const Shape& a, const Shape& b, double tol) noexcept {
  for (std::size_t r = 0; r < 3; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < 3 && match; ++i) {
      match = std::abs(a.angles[i] - b.angles[(i + r) % 3]) <= tol;
    }
    if (match) return true;
  }
  return false;
}

Cx apex_from_angles(double alpha, double beta) {
  const double gamma = std::numbers::pi - alpha - beta;
  if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0)) {
    throw Error(Errc::DomainError, "apex needs positive angles with alpha + beta < pi");
  }
  return std::polar(std::sin(beta) / std::sin(gamma), alpha);
}

Cx cross_ratio_geometric(const FourPoints& pts) {
  const Shape s = shape_of(pts);
  return apex_from_angles(s.angles[0], s.angles[1]);
}

}  // namespace fourpoint
