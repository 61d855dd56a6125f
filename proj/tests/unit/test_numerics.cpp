#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "doctest_complex.hpp"
#include "fourpoint/error.hpp"
#include "fourpoint/numerics.hpp"
#include "generators.hpp"

using namespace fourpoint;
using fourpoint::testing::Gen;

namespace {

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected fourpoint::Error");
  return Errc::ParseError;
}

bool contains(const std::vector<Cx>& roots, Cx z, double tol = 1e-9) {
  return std::any_of(roots.begin(), roots.end(), [&](Cx r) { return std::abs(r - z) <= tol; });
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("rho constants") {
  CHECK(std::abs(kRho * kRho - kRho2) < 1e-15);
  CHECK(std::abs(1.0 + kRho + kRho2) < 1e-15);
  CHECK(std::abs(kRho * kRho * kRho - 1.0) < 1e-15);
}

TEST_CASE("principal roots") {
  CHECK(std::abs(principal_sqrt(Cx{-1.0, 0.0}) - Cx{0.0, 1.0}) < 1e-15);
  CHECK(std::abs(principal_cbrt(Cx{-8.0, 0.0}) - 2.0 * std::polar(1.0, std::numbers::pi / 3.0)) < 1e-14);
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Cx z = g.disk(5.0);
    const Cx c = principal_cbrt(z);
    CHECK(std::abs(c * c * c - z) < 1e-12 * (1.0 + std::abs(z)));
    CHECK(std::arg(c) > -std::numbers::pi / 3.0 - 1e-12);
    CHECK(std::arg(c) <= std::numbers::pi / 3.0 + 1e-12);
  }
}

TEST_CASE("sphere points") {
  const SpherePoint inf = SpherePoint::infinity();
  CHECK(inf.is_infinite());
  CHECK_FALSE(SpherePoint(2.0).is_infinite());
  CHECK(error_code([&] { (void)inf.value(); }) == Errc::DomainError);
  CHECK(error_code([] { SpherePoint p(Cx{std::nan(""), 0.0}); }) == Errc::DomainError);
  CHECK(chordal_distance(inf, inf) == 0.0);
  CHECK(chordal_distance(0.0, inf) == doctest::Approx(1.0));
  CHECK(chordal_distance(1.0, -1.0) == doctest::Approx(1.0));
  CHECK(approx_equal(SpherePoint(1e12), inf, 1e-11));
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{1.0, 0.0, 1.0};  // x^2 + 1
  CHECK(p.degree() == 2);
  CHECK(p(Cx{0.0, 1.0}) == Cx{0.0});
  CHECK(p.derivative().coeff(1) == Cx{2.0});
  const Polynomial q = Polynomial{-1.0, 1.0} * Polynomial{1.0, 1.0};
  CHECK(q.coeff(0) == Cx{-1.0});
  CHECK(q.coeff(1) == Cx{0.0});
  CHECK(q.coeff(2) == Cx{1.0});
  CHECK((q - q).is_zero());
  CHECK(Polynomial{1.0, 1.0}.pow(3).coeff(2) == Cx{3.0});
  const std::array<Cx, 3> roots{1.0, 2.0, 3.0};
  CHECK(Polynomial::from_roots(roots).coeff(0) == Cx{-6.0});
  CHECK(Polynomial{0.0, 1.0, 0.0}.degree() == 1);
}

TEST_CASE("solve_poly on the reference polynomials") {
  const auto quad = solve_poly(Polynomial{1.0, 0.0, 1.0});
  REQUIRE(quad.size() == 2);
  CHECK(contains(quad, Cx{0.0, 1.0}));
  CHECK(contains(quad, Cx{0.0, -1.0}));

  const auto cubic = solve_poly(Polynomial{4.0, 0.0, 0.0, 1.0});
  REQUIRE(cubic.size() == 3);
  for (const Cx r : cubic) {
    CHECK(std::abs(std::abs(r) - std::cbrt(4.0)) < 1e-12);
    CHECK(std::abs(r * r * r + 4.0) < 1e-11);
  }

  const auto w = solve_poly(Polynomial{0.0, -4.0, 0.0, 4.0});
  REQUIRE(w.size() == 3);
  CHECK(std::abs(w[0] - Cx{-1.0}) < 1e-12);
  CHECK(std::abs(w[1]) < 1e-12);
  CHECK(std::abs(w[2] - Cx{1.0}) < 1e-12);
}

TEST_CASE("solve_poly multiple roots and determinism") {
  const std::array<Cx, 5> roots{2.0, 2.0, 2.0, Cx{0.0, 1.0}, -3.0};
  const Polynomial p = Polynomial::from_roots(roots);
  const auto a = solve_poly(p);
  const auto b = solve_poly(p);
  REQUIRE(a.size() == 5);
  CHECK(a == b);
  for (const Cx r : a) CHECK(relative_residual(p, r) <= 1e-9);
  CHECK(std::count_if(a.begin(), a.end(), [](Cx r) { return std::abs(r - 2.0) < 1e-4; }) == 3);
}

TEST_CASE("solve_poly degree limits") {
  CHECK(error_code([] { solve_poly(Polynomial{1.0}); }) == Errc::UnsupportedDegree);
  CHECK(error_code([] { solve_poly(Polynomial::monomial(13)); }) == Errc::UnsupportedDegree);
  const auto z = solve_poly(Polynomial::monomial(12));
  CHECK(z.size() == 12);
  for (const Cx r : z) CHECK(r == Cx{0.0});
  const auto lin = solve_poly(Polynomial{Cx{2.0, 1.0}, 1.0});
  REQUIRE(lin.size() == 1);
  CHECK(std::abs(lin[0] - Cx{-2.0, -1.0}) < 1e-15);
}

TEST_CASE("hesse_roots branches and degeneracies") {
  CHECK(error_code([] { hesse_roots(1.0); }) == Errc::DomainError);
  CHECK(error_code([] { hesse_roots(kRho); }) == Errc::DomainError);
  CHECK(error_code([] { hesse_roots(0.0); }) == Errc::DegenerateAlpha);
  CHECK(error_code([] { hesse_roots(2.0, CardanoBranch{0, 0}); }) == Errc::DomainError);
  CHECK(error_code([] { hesse_roots(2.0, CardanoBranch{1, 3}); }) == Errc::DomainError);

  const auto fallback = hesse_roots_or_solve(0.0);
  for (const Cx r : fallback) CHECK(std::abs(r * r * r + 4.0) < 1e-11);

  const Cx k{0.3, -1.7};
  const auto base = hesse_roots(k);
  for (const auto& branch : CardanoBranch::all()) {
    auto z = hesse_roots(k, branch);
    CHECK(std::abs(z[0] + z[1] + z[2] - 3.0 * k) < 1e-9);
    CHECK(fourpoint::testing::same_multiset(z, base, 1e-8));
    for (const Cx r : z) CHECK(relative_residual(hesse_cubic(k), r) <= 1e-9);
  }
}

TEST_CASE("discriminant normalization") {
  CHECK(std::abs(discriminant(Polynomial{-1.0, 0.0, 0.0, 4.0}) - Cx{-27.0}) < 1e-12);
  CHECK(std::abs(discriminant(hesse_cubic(2.0)) - Cx{3024.0}) < 1e-9);
  CHECK(std::abs(discriminant(Polynomial{1.0, 0.0, 1.0}) - Cx{-4.0}) < 1e-15);
  CHECK(std::abs(discriminant(Polynomial{1.0, 2.0, 1.0})) < 1e-15);
  CHECK(error_code([] { discriminant(Polynomial{1.0, 1.0}); }) == Errc::UnsupportedDegree);
  CHECK(error_code([] { discriminant(Polynomial::monomial(4)); }) == Errc::UnsupportedDegree);
}

TEST_CASE("approx_equal scales with magnitude") {
  CHECK(approx_equal(Cx{1e6}, Cx{1e6 + 1e-4}));
  CHECK_FALSE(approx_equal(Cx{1.0}, Cx{1.0 + 1e-6}));
  CHECK(approx_equal(Cx{0.0}, Cx{1e-10}));
}

}  // TEST_SUITE
