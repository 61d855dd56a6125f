#include "fourpoint/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fourpoint/error.hpp"

namespace fourpoint {

namespace {

const Polynomial& j_numerator() {
  static const Polynomial n = Polynomial{1.0, -1.0, 1.0}.pow(3);
  return n;
}

const Polynomial& j_denominator() {
  static const Polynomial d = Polynomial{0.0, 0.0, 1.0} * Polynomial{-1.0, 1.0}.pow(2);
  return d;
}

constexpr int kJDegree = 6;

// Generic direction for the multiplicity probes.
const Cx kProbeDirection = std::polar(1.0, 0.7);

std::string format_point(const SpherePoint& p) {
  if (p.is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(6);
  os << p.value();
  return os.str();
}

struct CriticalPoint {
  SpherePoint point;
  SpherePoint value;
  int multiplicity;
};

std::vector<CriticalPoint> critical_points() {
  const SpherePoint inf = SpherePoint::infinity();
  const SpherePoint harmonic = 27.0 / 4.0;
  return {
      {0.0, inf, 2},          {1.0, inf, 2},          {inf, inf, 2},
      {2.0, harmonic, 2},     {0.5, harmonic, 2},     {-1.0, harmonic, 2},
      {-kRho, 0.0, 3},        {-kRho2, 0.0, 3},
  };
}

// |local coordinate of J(c + e u) - J(c)| in a chart where J(c) is 0.
double local_offset(const CriticalPoint& cp, double eps) {
  SpherePoint probe;
  if (cp.point.is_infinite()) {
    probe = 1.0 / (eps * kProbeDirection);
  } else {
    probe = cp.point.value() + eps * kProbeDirection;
  }
  const SpherePoint j = j_invariant(probe);
  if (cp.value.is_infinite()) return j.is_infinite() ? 0.0 : 1.0 / std::abs(j.value());
  return j.is_infinite() ? std::numeric_limits<double>::infinity()
                         : std::abs(j.value() - cp.value.value());
}

BranchingEntry check_entry(const CriticalPoint& cp, double tol) {
  BranchingEntry entry{cp.point, cp.value, cp.multiplicity};
  const SpherePoint actual = j_invariant(cp.point);
  bool ok = j_values_equal(actual, cp.value, tol);

  if (cp.point.is_finite() && cp.value.is_finite()) {
    entry.derivative = std::abs(j_derivative(cp.point.value()));
    ok = ok && entry.derivative <= tol * (1.0 + std::abs(cp.value.value()));
  }

  const double coarse = local_offset(cp, 1e-3);
  const double fine = local_offset(cp, 1e-4);
  entry.measured_slope = (coarse > 0.0 && fine > 0.0) ? std::log10(coarse / fine) : 0.0;
  ok = ok && std::abs(entry.measured_slope - cp.multiplicity) <= 0.1;
  entry.passed = ok;
  return entry;
}

FiberCheck check_fiber(const SpherePoint& value, const std::vector<CriticalPoint>& critical) {
  FiberCheck fiber{value};
  std::vector<const CriticalPoint*> members;
  for (const auto& s : critical) {
    if (approx_equal(s.value, value)) {
      members.push_back(&s);
      fiber.multiplicity_sum += s.multiplicity;
    }
  }

  // Independent count: the finite preimages are roots of N - v D (or of D
  // over infinity); the deficit from degree 6 sits at infinity.
  const Polynomial fiber_poly =
      value.is_infinite() ? j_denominator() : j_numerator() - j_denominator() * value.value();
  const auto roots = solve_poly(fiber_poly);
  std::vector<int> counts(members.size(), 0);
  bool all_matched = true;
  for (const Cx r : roots) {
    bool matched = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& p = members[i]->point;
      if (p.is_finite() && std::abs(r - p.value()) <= 1e-4) {
        ++counts[i];
        matched = true;
        break;
      }
    }
    all_matched = all_matched && matched;
  }
  const int at_infinity = kJDegree - static_cast<int>(fiber_poly.degree());
  bool counts_ok = all_matched;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int expected = members[i]->multiplicity;
    const int found = members[i]->point.is_infinite() ? at_infinity : counts[i];
    counts_ok = counts_ok && found == expected;
  }
  const bool infinity_listed =
      std::any_of(members.begin(), members.end(),
                  [](const CriticalPoint* s) { return s->point.is_infinite(); });
  if (!infinity_listed) counts_ok = counts_ok && at_infinity == 0;
  fiber.degree_check = counts_ok && fiber.multiplicity_sum == kJDegree;
  return fiber;
}

}  // namespace

SpherePoint j_invariant(const SpherePoint& lambda) {
  if (lambda.is_infinite()) return SpherePoint::infinity();
  const Cx l = lambda.value();
  const Cx den = l * l * (l - 1.0) * (l - 1.0);
  if (den == Cx{0.0}) return SpherePoint::infinity();
  const Cx q = l * l - l + 1.0;
  const Cx value = q * q * q / den;
  if (!is_finite(value)) return SpherePoint::infinity();
  return value;
}

SpherePoint j_of_points(const FourPoints& pts) { return j_invariant(cross_ratio(pts)); }

Cx j_chain(Cx lambda) {
  if (!is_finite(lambda) || lambda == Cx{0.0} || lambda == Cx{1.0}) {
    throw Error(Errc::DomainError, "j_chain needs finite lambda outside {0, 1}");
  }
  static const MoebiusMap first(kRho, kRho2, 1.0, kRho2);
  const SpherePoint w = first(lambda);

  SpherePoint u = SpherePoint::infinity();
  if (w.is_finite() && w.value() != Cx{0.0}) {
    const Cx w3 = w.value() * w.value() * w.value();
    u = w3 + 1.0 / w3;
  }

  if (u.is_infinite()) return 0.0;
  const Cx shifted = u.value() - 2.0;
  if (shifted == Cx{0.0}) throw Error(Errc::DomainError, "j_chain hit a pole");
  return -27.0 / shifted;
}

Cx j_derivative(Cx lambda) {
  const Polynomial& n = j_numerator();
  const Polynomial& d = j_denominator();
  const Cx dv = d(lambda);
  if (dv == Cx{0.0}) throw Error(Errc::DomainError, "J' evaluated at a pole");
  return (n.derivative()(lambda) * dv - n(lambda) * d.derivative()(lambda)) / (dv * dv);
}

bool j_values_equal(const SpherePoint& a, const SpherePoint& b, double rel_tol) noexcept {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  const Cx x = *a.finite();
  const Cx y = *b.finite();
  return std::abs(x - y) <= rel_tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

bool are_equivalent(const EquivalenceOperand& a, const EquivalenceOperand& b) {
  auto j_of = [](const EquivalenceOperand& op) {
    return std::visit(
        [](const auto& v) -> SpherePoint {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FourPoints>) {
            return j_of_points(v);
          } else {
            return j_invariant(v);
          }
        },
        op);
  };
  return j_values_equal(j_of(a), j_of(b));
}

bool BranchingReport::all_passed() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; }) &&
         std::all_of(fibers.begin(), fibers.end(), [](const auto& f) { return f.degree_check; });
}

BranchingReport branching_report(double tol) {
  if (!(tol > 0.0)) throw Error(Errc::DomainError, "tolerance must be positive");
  const auto critical = critical_points();
  BranchingReport report;
  for (const auto& s : critical) report.entries.push_back(check_entry(s, tol));
  for (const SpherePoint& v : {SpherePoint::infinity(), SpherePoint(27.0 / 4.0), SpherePoint(0.0)}) {
    report.fibers.push_back(check_fiber(v, critical));
  }
  return report;
}

BranchingReport verify_branching(double tol) {
  BranchingReport report = branching_report(tol);
  for (const auto& e : report.entries) {
    if (!e.passed) throw Error(Errc::VerificationFailure, describe(e));
  }
  for (const auto& f : report.fibers) {
    if (!f.degree_check) {
      throw Error(Errc::VerificationFailure, "fiber over " + format_point(f.value) +
                                                 " has multiplicity sum " +
                                                 std::to_string(f.multiplicity_sum));
    }
  }
  return report;
}

std::string describe(const BranchingEntry& entry) {
  std::ostringstream os;
  os << format_point(entry.critical_point) << " -> " << format_point(entry.critical_value)
     << " multiplicity " << entry.multiplicity << " (slope " << entry.measured_slope << ")";
  return os.str();
}

}  // namespace fourpoint
