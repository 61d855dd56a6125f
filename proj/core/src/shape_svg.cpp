#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "fourpoint/error.hpp"
#include "fourpoint/shape.hpp"

namespace fourpoint {

namespace {

constexpr std::array<const char*, 4> kTriangleColors{"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};

std::string escape_xml(const std::string& text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// World (y up) to pixel (y down) transform plus number formatting.
class Canvas {
 public:
  Canvas(const std::vector<Cx>& finite, const SvgOptions& opt) : opt_(opt) {
    double xmin = finite.front().real(), xmax = xmin;
    double ymin = finite.front().imag(), ymax = ymin;
    for (const Cx z : finite) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
    center_ = {(xmin + xmax) / 2.0, (ymin + ymax) / 2.0};
    double ex = (xmax - xmin) * opt.margin_factor;
    double ey = (ymax - ymin) * opt.margin_factor;
    const double floor = 1e-9 * std::max(1.0, std::abs(center_));
    ex = std::max(ex, floor);
    ey = std::max(ey, floor);
    scale_ = std::min(opt.width / ex, opt.height / ey);
    reach_ = 2.0 * std::hypot(opt.width, opt.height) / scale_;
  }

  double x(Cx z) const noexcept { return opt_.width / 2.0 + (z.real() - center_.real()) * scale_; }
  double y(Cx z) const noexcept { return opt_.height / 2.0 - (z.imag() - center_.imag()) * scale_; }
  double length(double world) const noexcept { return world * scale_; }
  /// World distance that always leaves the viewport.
  double reach() const noexcept { return reach_; }

  std::string num(double v) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", opt_.precision, v == 0.0 ? 0.0 : v);
    return buf;
  }
  std::string point(Cx z) const { return num(x(z)) + "," + num(y(z)); }

 private:
  const SvgOptions& opt_;
  Cx center_;
  double scale_ = 1.0;
  double reach_ = 1.0;
};

std::string segment_path(const Canvas& cv, Cx from, Cx to) {
  return "M " + cv.point(from) + " L " + cv.point(to);
}

// Arc of a circumcircle from `from` to `to` that avoids `avoid`.
std::string arc_path(const Canvas& cv, const Circle& c, Cx from, Cx to, Cx avoid) {
  const double two_pi = 2.0 * std::numbers::pi;
  auto ccw = [&](Cx a, Cx b) {
    double d = std::arg(b - c.center) - std::arg(a - c.center);
    while (d < 0.0) d += two_pi;
    while (d >= two_pi) d -= two_pi;
    return d;
  };
  const double to_end = ccw(from, to);
  const double to_avoid = ccw(from, avoid);
  const bool counterclockwise = !(to_avoid < to_end);
  const double sweep = counterclockwise ? to_end : two_pi - to_end;
  // Counterclockwise in y-up coordinates is sweep-flag 0 after the y flip.
  const std::string r = cv.num(cv.length(c.radius));
  return "M " + cv.point(from) + " A " + r + " " + r + " 0 " + (sweep > std::numbers::pi ? "1" : "0") +
         " " + (counterclockwise ? "0" : "1") + " " + cv.point(to);
}

// Side of the curvilinear triangle between p and q lying on the
// generalized circle through p, q and `opposite` but not through it.
std::string side_path(const Canvas& cv, const SpherePoint& p, const SpherePoint& q,
                      const SpherePoint& opposite) {
  if (p.is_infinite() || q.is_infinite()) {
    const Cx start = p.is_infinite() ? q.value() : p.value();
    const Cx away = start - opposite.value();
    return segment_path(cv, start, start + away / std::abs(away) * cv.reach());
  }
  const Cx a = p.value(), b = q.value();
  if (opposite.is_infinite()) return segment_path(cv, a, b);

  const Cx o = opposite.value();
  const GeneralizedCircle gc = circumcircle(a, b, o);
  if (const auto* circle = std::get_if<Circle>(&gc)) return arc_path(cv, *circle, a, b, o);

  // Collinear: the segment if it misses the opposite point, else the two
  // rays through infinity.
  const Cx dir = std::get<Line>(gc).direction;
  const double ta = 0.0, tb = (std::conj(dir) * (b - a)).real(), to = (std::conj(dir) * (o - a)).real();
  if (!(std::min(ta, tb) < to && to < std::max(ta, tb))) return segment_path(cv, a, b);
  const Cx ab = (b - a) / std::abs(b - a);
  return segment_path(cv, a, a - ab * cv.reach()) + " " + segment_path(cv, b, b + ab * cv.reach());
}

std::string circle_element(const Canvas& cv, const GeneralizedCircle& gc) {
  if (const auto* circle = std::get_if<Circle>(&gc)) {
    return "<circle cx=\"" + cv.num(cv.x(circle->center)) + "\" cy=\"" +
           cv.num(cv.y(circle->center)) + "\" r=\"" + cv.num(cv.length(circle->radius)) + "\"/>";
  }
  const auto& line = std::get<Line>(gc);
  const Cx a = line.point - line.direction * cv.reach();
  const Cx b = line.point + line.direction * cv.reach();
  return "<line x1=\"" + cv.num(cv.x(a)) + "\" y1=\"" + cv.num(cv.y(a)) + "\" x2=\"" +
         cv.num(cv.x(b)) + "\" y2=\"" + cv.num(cv.y(b)) + "\"/>";
}

// The generalized circle through the three points other than `omitted`.
GeneralizedCircle circle_through(const FourPoints& pts, std::size_t omitted) {
  std::vector<Cx> finite;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != omitted && pts[i].is_finite()) finite.push_back(pts[i].value());
  }
  if (finite.size() == 3) return circumcircle(finite[0], finite[1], finite[2]);
  const Cx d = finite[1] - finite[0];
  return Line{finite[0], d / std::abs(d)};
}

}  // namespace

std::string shape_svg(const FourPoints& pts, const SvgOptions& options) {
  if (!(options.width > 0.0) || !(options.height > 0.0) || !(options.margin_factor >= 1.0) ||
      options.precision < 0 || options.precision > 12) {
    throw Error(Errc::DomainError, "invalid SVG canvas options");
  }
  if (is_concyclic(pts)) {
    throw Error(Errc::ConcyclicInput, "the four points lie on one generalized circle");
  }

  std::vector<Cx> finite;
  std::optional<std::size_t> at_infinity;
  for (std::size_t i = 0; i < 4; ++i) {
    if (pts[i].is_finite()) {
      finite.push_back(pts[i].value());
    } else {
      at_infinity = i;
    }
  }
  const Canvas cv(finite, options);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << cv.num(options.width) << "\" height=\"" << cv.num(options.height) << "\" viewBox=\"0 0 "
     << cv.num(options.width) << " " << cv.num(options.height) << "\">\n";
  if (!options.title.empty()) os << "  <title>" << escape_xml(options.title) << "</title>\n";
  os << "  <desc>Four points, their four circumcircles and the curvilinear triangles.</desc>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << cv.num(options.width) << "\" height=\""
     << cv.num(options.height) << "\" fill=\"white\"/>\n";

  os << "  <g id=\"circumcircles\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
        "stroke-dasharray=\"4 3\">\n";
  for (std::size_t k = 0; k < 4; ++k) {
    os << "    " << circle_element(cv, circle_through(pts, k)) << "\n";
  }
  os << "  </g>\n";

  os << "  <g id=\"triangles\" fill=\"none\" stroke-width=\"2.5\" stroke-linecap=\"round\">\n";
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<std::size_t, 3> v{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != k) v[n++] = i;
    }
    os << "    <path class=\"triangle-omit-" << k + 1 << "\" stroke=\"" << kTriangleColors[k]
       << "\" d=\"";
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t i = v[s], j = v[(s + 1) % 3];
      if (s > 0) os << " ";
      os << side_path(cv, pts[i], pts[j], pts[k]);
    }
    os << "\"/>\n";
  }
  os << "  </g>\n";

  os << "  <g id=\"points\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string label = escape_xml(options.labels[i]);
    if (pts[i].is_infinite()) continue;
    const Cx z = pts[i].value();
    os << "    <circle cx=\"" << cv.num(cv.x(z)) << "\" cy=\"" << cv.num(cv.y(z))
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "    <text x=\"" << cv.num(cv.x(z) + 6.0) << "\" y=\"" << cv.num(cv.y(z) - 6.0) << "\">"
       << label << "</text>\n";
  }
  if (at_infinity) {
    os << "    <text id=\"infinity\" x=\"" << cv.num(options.width - 8.0) << "\" y=\"20\" "
       << "text-anchor=\"end\">" << escape_xml(options.labels[*at_infinity])
       << " = \xE2\x88\x9E</text>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace fourpoint
