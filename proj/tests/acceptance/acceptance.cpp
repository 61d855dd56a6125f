// Acceptance gate: one line per criterion, nonzero exit if any fails.
// All bounds are fixed here; sample sizes and seeds are fixed as well.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "fourpoint/fourpoint.hpp"
#include "generators.hpp"

using namespace fourpoint;
using fourpoint::testing::Gen;
using fourpoint::testing::rel_err;
using fourpoint::testing::same_multiset;

namespace {

const SpherePoint kInf = SpherePoint::infinity();
const Cx I{0.0, 1.0};

struct Result {
  bool passed;
  std::string detail;
};

// Tracks the worst observed error against a bound.
struct Worst {
  double bound;
  double value = 0.0;
  std::size_t count = 0;
  bool finite = true;

  void add(double e) {
    ++count;
    if (!std::isfinite(e)) finite = false;
    value = std::max(value, e);
  }
  bool ok() const { return finite && value <= bound; }
  std::string str() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max %.3g <= %.0e over %zu", value, bound, count);
    return buf;
  }
};

Result critical_values() {
  Worst w{1e-12};
  for (const Cx l : {Cx{2.0}, Cx{0.5}, Cx{-1.0}}) w.add(std::abs(j_invariant(l).value() - 6.75));
  for (const Cx l : {-kRho, -kRho2}) w.add(std::abs(j_invariant(l).value()));
  return {w.ok(), w.str()};
}

Result branching() {
  const BranchingReport r = branching_report(1e-8);
  int inf = 0, harmonic = 0, zero = 0;
  double slope_err = 0.0;
  bool ok = r.all_passed();
  for (const auto& e : r.entries) {
    slope_err = std::max(slope_err, std::abs(e.measured_slope - e.multiplicity));
    if (e.critical_value.is_infinite()) {
      inf += e.multiplicity == 2;
    } else if (std::abs(e.critical_value.value() - 6.75) < 1e-9) {
      harmonic += e.multiplicity == 2;
    } else if (std::abs(e.critical_value.value()) < 1e-9) {
      zero += e.multiplicity == 3;
    }
  }
  for (const auto& f : r.fibers) ok = ok && f.multiplicity_sum == 6;
  ok = ok && inf == 3 && harmonic == 3 && zero == 2 && slope_err <= 0.1;
  char buf[128];
  std::snprintf(buf, sizeof buf, "(2,2,2) over inf and 27/4, (3,3) over 0, fibers %zu x 6, slope err %.2g <= 0.1",
                r.fibers.size(), slope_err);
  return {ok, buf};
}

Result chain() {
  Gen g(3001);
  Worst w{1e-9};
  for (int i = 0; i < 1000; ++i) {
    const Cx l = g.lambda(10.0, 1e-3);
    const Cx j = j_invariant(l).value();
    w.add(std::abs(j_chain(l) - j) / (1.0 + std::abs(j)));
  }
  return {w.ok(), w.str()};
}

Result orbit() {
  Gen g(3002);
  Worst w{1e-9};
  for (int i = 0; i < 1000; ++i) {
    const Cx l = g.lambda();
    const Cx j = j_invariant(l).value();
    const auto members = cross_ratio_orbit(l);
    for (const Cx v : members.values()) w.add(rel_err(j_invariant(v).value(), j));
  }
  // The list with lambda - 1 instead of 1 - lambda is not J-constant.
  const bool literal_breaks = !j_values_equal(j_invariant(3.0), j_invariant(3.0 - 1.0));
  return {w.ok() && literal_breaks,
          w.str() + (literal_breaks ? "; literal list breaks at 3" : "; literal list did NOT break")};
}

Result fermat() {
  const double c = std::cbrt(0.25);
  const auto w = weierstrass_from_points(c, c * kRho, c * kRho2);
  const double werr = std::max(std::abs(w.g2), std::abs(w.g3 - 1.0));
  const double jerr = std::abs(j_of_points(FourPoints(c, c * kRho, c * kRho2, kInf)).value());
  const double lerr = std::abs(j_invariant(-kRho).value());
  char buf[128];
  std::snprintf(buf, sizeof buf, "(g2,g3) err %.2g <= 1e-12, J err %.2g, %.2g <= 1e-10", werr, jerr, lerr);
  return {werr <= 1e-12 && jerr <= 1e-10 && lerr <= 1e-10, buf};
}

Result quartic_and_cubics() {
  const double c = std::cbrt(0.25);
  const FourPoints quartic(1.0, I, -1.0, -I);
  const FourPoints fermat(c, c * kRho, c * kRho2, kInf);
  const FourPoints cubic(1.0, kRho, kRho2, kInf);
  const bool iso = are_equivalent(fermat, cubic);
  const bool sep = !are_equivalent(quartic, fermat) && !are_equivalent(quartic, cubic);
  const double im = std::abs(cross_ratio(quartic).imag());
  char buf[128];
  std::snprintf(buf, sizeof buf, "(3,3)~(3,2): %s, (4,2) distinct: %s, |Im chi| %.2g <= 1e-12",
                iso ? "yes" : "no", sep ? "yes" : "no", im);
  return {iso && sep && im <= 1e-12, buf};
}

Result jacobi_edwards() {
  Gen g(3007);
  Worst w{1e-9};
  for (int i = 0; i < 1000; ++i) {
    const Cx l = g.lambda();
    const Cx a = symmetric_parameter_from_lambda(l);
    w.add(std::abs(symmetric_cross_ratio(a) - l) / std::max(1.0, std::abs(l)));
  }
  int iso = 0;
  for (int i = 0; i < 200; ++i) {
    Cx a;
    do {
      a = g.disk(3.0);
    } while (std::abs(a) < 1e-2 || std::abs(std::pow(a, 4) - 1.0) < 1e-2);
    iso += is_isomorphic(Edwards{a}, Jacobi{a * a});
  }
  return {w.ok() && iso == 200, w.str() + "; Edwards(a)~Jacobi(a^2) " + std::to_string(iso) + "/200"};
}

Result hesse_closed_form() {
  Gen g(3008);
  Worst w{1e-8};
  for (int i = 0; i < 200; ++i) {
    const Cx k = g.hesse_k(5.0, 1e-2);
    const SpherePoint j = j_of_points(branch_points(Hesse{k}));
    w.add(j.is_finite() ? rel_err(hesse_phi(k), j.value()) : INFINITY);
  }
  return {w.ok(), w.str()};
}

Result hesse_inversion() {
  Gen g(3009);
  Worst w{1e-8};
  bool cube_ok = true;
  for (int i = 0; i < 200; ++i) {
    const Cx l = g.lambda();
    const Cx j = j_invariant(l).value();
    const Cx k = hesse_from_lambda(l);
    w.add(std::abs(hesse_phi(k) - j) / (1.0 + std::abs(j)));
    cube_ok = cube_ok && std::abs(k * k * k - 1.0) > 1e-8;
  }
  return {w.ok() && cube_ok, w.str() + (cube_ok ? "; k^3 != 1" : "; k^3 = 1 returned")};
}

Result cardano() {
  Gen g(3010);
  std::size_t mismatches = 0, total = 0;
  Worst sum{1e-9};
  for (int i = 0; i < 100; ++i) {
    const Cx k = g.hesse_k();
    const auto reference = solve_poly(hesse_cubic(k));
    for (const auto& b : CardanoBranch::all()) {
      const auto z = hesse_roots(k, b);
      ++total;
      mismatches += !same_multiset(z, reference, 1e-8);
      sum.add(std::abs(z[0] + z[1] + z[2] - 3.0 * k));
    }
  }
  return {mismatches == 0 && sum.ok(),
          std::to_string(total - mismatches) + "/" + std::to_string(total) +
              " root sets match to 1e-8; sum " + sum.str()};
}

Result shapes() {
  Gen g(3011);
  Worst angles{1e-8};
  Worst apex{1e-8};
  std::size_t agree = 0, pairs = 0;
  for (int i = 0; i < 500; ++i) {
    const FourPoints pts = g.general_position();
    auto sorted = [](std::array<double, 3> a) {
      std::sort(a.begin(), a.end());
      return a;
    };
    const auto base = sorted(triangle_shape(pts, 3).angles);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto other = sorted(triangle_shape(pts, k).angles);
      for (int t = 0; t < 3; ++t) angles.add(std::abs(other[t] - base[t]));
    }

    const auto orbit = cross_ratio_orbit(cross_ratio(pts));
    const Cx geo = cross_ratio_geometric(pts);
    double nearest = INFINITY;
    for (const Cx v : orbit.values()) nearest = std::min(nearest, std::abs(v - geo) / std::max(1.0, std::abs(v)));
    apex.add(nearest);

    // Matched pair: a Moebius image; unmatched pair: one point moved.
    const FourPoints same = pts.mapped(g.moebius());
    const FourPoints moved(pts[0], pts[1], pts[2], pts[3].value() + g.disk(0.3) + 0.05);
    for (const FourPoints* q : {&same, &moved}) {
      if (is_concyclic(*q)) continue;
      ++pairs;
      agree += same_shape(shape_of(pts), shape_of(*q), 1e-7) == are_equivalent(pts, *q);
    }
  }
  const bool ok = angles.ok() && apex.ok() && agree == pairs;
  return {ok, "angles " + angles.str() + "; shape<->J " + std::to_string(agree) + "/" +
                  std::to_string(pairs) + "; apex " + apex.str()};
}

Result hesse_discriminant() {
  Gen g(3012);
  Worst w{1e-10};
  for (int i = 0; i < 100; ++i) {
    const Cx k = g.disk(5.0);
    const Cx expected = 432.0 * (k * k * k - 1.0);
    w.add(std::abs(discriminant(hesse_cubic(k)) - expected) / std::max(1e-300, std::abs(expected)));
  }
  return {w.ok(), w.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {"critical values of J", critical_values},
      {"branching verification", branching},
      {"factorization chain", chain},
      {"orbit invariance", orbit},
      {"Fermat cubic", fermat},
      {"x^n+y^m=1 curves", quartic_and_cubics},
      {"Jacobi/Edwards round trip", jacobi_edwards},
      {"Hesse closed form", hesse_closed_form},
      {"Hesse inversion", hesse_inversion},
      {"Cardano branch formula", cardano},
      {"shape suite", shapes},
      {"Hesse discriminant", hesse_discriminant},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r{false, ""};
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.passed;
    std::printf("AC%-2zu %s  %-26s %s\n", i + 1, r.passed ? "PASS" : "FAIL", criteria[i].name, r.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
