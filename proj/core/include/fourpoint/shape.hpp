#pragma once

// Geometry of 4-point sets: circumcircles, the angles of the curvilinear
// triangles cut out by them (the "shape"), the apex construction of a cross
// ratio from two angles, and SVG rendering of the configuration.

#include <array>
#include <cstddef>
#include <string>
#include <variant>

#include "fourpoint/moebius.hpp"
#include "fourpoint/numerics.hpp"

namespace fourpoint {

struct Circle {
  Cx center;
  double radius;
};

struct Line {
  Cx point;
  Cx direction;  ///< unit length
};

/// A circle or a line (a circle through infinity).
using GeneralizedCircle = std::variant<Circle, Line>;

/// The generalized circle through three distinct finite points. A Line is
/// returned when the points are collinear to relative tolerance 1e-10.
/// Throws Errc::DegenerateInput on repeated points.
GeneralizedCircle circumcircle(Cx z1, Cx z2, Cx z3);

/// Whether z lies on the generalized circle within `tol` (scaled).
bool on_circle(const GeneralizedCircle& c, Cx z, double tol = 1e-10) noexcept;

/// True iff the four points lie on one generalized circle, i.e. their cross
/// ratio is real (|Im chi| <= 1e-9 max(1, |chi|)).
bool is_concyclic(const FourPoints& pts);

/// Oriented angle triple of the curvilinear triangle on three of the points.
struct Shape {
  std::array<double, 3> angles{};        ///< at vertices[0..2], sum pi
  std::array<std::size_t, 3> vertices{};  ///< indices into the input FourPoints
  std::size_t omitted = 3;               ///< index of the point sent to infinity
  bool relabeled = false;   ///< vertices 2 and 3 were swapped to make the triangle positive
  bool near_concyclic = false;  ///< |Im chi| in (1e-9, 1e-6]: angles are ill-conditioned
  int orientation = +1;

  /// Lexicographically smallest cyclic rotation of `angles`.
  std::array<double, 3> canonical() const noexcept;
};

/// Shape of the curvilinear triangle on p1, p2, p3: the Euclidean angles of
/// their images under z -> 1/(z - p4) (identity if p4 is infinite). A
/// negatively oriented image is relabeled (p1, p3, p2).
/// Throws Errc::ConcyclicInput for concyclic sets.
Shape shape_of(const FourPoints& pts);

/// Shape of the triangle on the three points other than `omitted`, taken
/// in their original order.
Shape triangle_shape(const FourPoints& pts, std::size_t omitted);

/// Equality of angle triples up to cyclic rotation.
bool same_shape(const Shape& a, const Shape& b, double tol = 1e-7) noexcept;

/// Apex of the positively oriented triangle on [0, 1] with angle alpha at 0
/// and beta at 1: (sin beta / sin(pi - alpha - beta)) e^{i alpha}.
/// Throws Errc::DomainError unless alpha, beta > 0 and alpha + beta < pi.
Cx apex_from_angles(double alpha, double beta);

/// The cross ratio rebuilt from the shape: apex_from_angles on the first
/// two angles of shape_of(pts). This is chi(p1, p2, p4, p3), or
/// chi(p1, p3, p4, p2) when the shape was relabeled; either way a member of
/// the orbit of cross_ratio(pts).
Cx cross_ratio_geometric(const FourPoints& pts);

struct SvgOptions {
  double width = 640.0;
  double height = 640.0;
  double margin_factor = 1.2;  ///< viewport = margin_factor x bounding box of finite points
  int precision = 6;
  std::string title;
  std::array<std::string, 4> labels{"z1", "z2", "z3", "z4"};
};

/// SVG 1.1 document with the points, the four circumcircles and the arcs of
/// the four curvilinear triangles. Deterministic for fixed input.
/// Throws Errc::ConcyclicInput and Errc::DomainError on invalid options.
std::string shape_svg(const FourPoints& pts, const SvgOptions& options = {});

}  // namespace fourpoint
