#include <cmath>

#include "doctest.h"
#include "doctest_complex.hpp"
#include "fourpoint/error.hpp"
#include "fourpoint/invariants.hpp"
#include "fourpoint/moebius.hpp"
#include "generators.hpp"

using namespace fourpoint;
using fourpoint::testing::cross_ratio_formula;

namespace {

const SpherePoint kInf = SpherePoint::infinity();
const Cx I{0.0, 1.0};

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

bool maps_to(const MoebiusMap& m, const SpherePoint& from, const SpherePoint& to) {
  return chordal_distance(m(from), to) <= 1e-10;
}

// Whether m permutes pts according to the pairs (i <-> j), (k <-> l).
bool swaps(const MoebiusMap& m, const FourPoints& pts, std::size_t i, std::size_t j, std::size_t k,
           std::size_t l) {
  return maps_to(m, pts[i], pts[j]) && maps_to(m, pts[j], pts[i]) && maps_to(m, pts[k], pts[l]) &&
         maps_to(m, pts[l], pts[k]);
}

}  // namespace

TEST_SUITE("moebius") {

TEST_CASE("map construction and normalization") {
  CHECK(error_code([] { MoebiusMap(1.0, 2.0, 2.0, 4.0); }) == Errc::DegenerateInput);
  const MoebiusMap m(2.0, 0.0, 0.0, 4.0);
  CHECK(std::abs(m.d()) == doctest::Approx(1.0));
  CHECK(m.is_affine());
  CHECK(m.approx_equal(MoebiusMap(1.0, 0.0, 0.0, 2.0)));
  CHECK((m * m.inverse()).approx_equal(MoebiusMap::identity()));
}

TEST_CASE("apply") {
  CHECK(fourpoint::apply(MoebiusMap::identity(), Cx{5.0, 1.0}).value() == Cx{5.0, 1.0});
  const MoebiusMap recip(0.0, 1.0, 1.0, 0.0);
  CHECK(fourpoint::apply(recip, 0.0).is_infinite());
  CHECK(fourpoint::apply(recip, kInf).value() == Cx{0.0});
  const MoebiusMap m(2.0, 1.0, 1.0, -3.0);
  CHECK(std::abs(fourpoint::apply(m, kInf).value() - 2.0) < 1e-15);
  CHECK(fourpoint::apply(m, 3.0).is_infinite());
  CHECK(fourpoint::apply(MoebiusMap::affine(2.0, 1.0), kInf).is_infinite());
}

TEST_CASE("map_from_triple") {
  CHECK(map_from_triple(0.0, 1.0, kInf).approx_equal(MoebiusMap::identity()));

  const MoebiusMap m = map_from_triple(1.0, I, -1.0);
  CHECK(maps_to(m, 1.0, 0.0));
  CHECK(maps_to(m, I, 1.0));
  CHECK(maps_to(m, -1.0, kInf));
  CHECK(std::abs(m(-I).value() - cross_ratio_formula(1.0, I, -1.0, -I)) < 1e-12);

  const MoebiusMap n = map_from_triple(kInf, 0.0, 1.0);
  CHECK(maps_to(n, kInf, 0.0));
  CHECK(maps_to(n, 0.0, 1.0));
  CHECK(maps_to(n, 1.0, kInf));
  // Brute-force: the map is z -> 1/(1 - z) up to scale.
  CHECK(n.approx_equal(MoebiusMap(0.0, 1.0, -1.0, 1.0)));

  const MoebiusMap q = map_from_triple(2.0, kInf, 5.0);
  CHECK(maps_to(q, 2.0, 0.0));
  CHECK(maps_to(q, kInf, 1.0));
  CHECK(maps_to(q, 5.0, kInf));

  CHECK(error_code([] { map_from_triple(1.0, 1.0, 2.0); }) == Errc::DegenerateTriple);
  CHECK(error_code([] { map_from_triple(kInf, 1.0, kInf); }) == Errc::DegenerateTriple);
}

TEST_CASE("four points") {
  CHECK(error_code([] { FourPoints(0.0, 1.0, 1.0, 2.0); }) == Errc::DegenerateInput);
  CHECK(error_code([] { FourPoints(kInf, 1.0, kInf, 2.0); }) == Errc::DegenerateInput);
  const FourPoints pts(0.0, 1.0, kInf, 2.0);
  CHECK(pts.contains_infinity());
  const FourPoints r = pts.permuted({3, 2, 1, 0});
  CHECK(r[0].value() == Cx{2.0});
  CHECK(r[1].is_infinite());
}

TEST_CASE("cross ratio examples") {
  const Cx lambda{0.3, 0.7};
  CHECK(std::abs(cross_ratio(0.0, 1.0, kInf, lambda) - lambda) < 1e-15);
  CHECK(std::abs(cross_ratio(0.0, 1.0, 2.0, 3.0) - Cx{-3.0}) < 1e-15);
  CHECK(std::abs(cross_ratio(1.0, I, -1.0, -I) - Cx{-1.0}) < 1e-15);
  CHECK(error_code([] { cross_ratio(0.0, 1.0, 0.0, 2.0); }) == Errc::DegenerateInput);
}

TEST_CASE("cross ratio with infinity equals the map definition") {
  const std::array<Cx, 4> z{Cx{0.2, 1.0}, Cx{-1.0, 0.5}, Cx{2.0, -0.3}, Cx{0.7, 0.1}};
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<SpherePoint, 4> p{z[0], z[1], z[2], z[3]};
    p[k] = kInf;
    const Cx chi = cross_ratio(p[0], p[1], p[2], p[3]);
    const SpherePoint via_map = map_from_triple(p[0], p[1], p[2])(p[3]);
    CHECK(std::abs(chi - via_map.value()) < 1e-12);
  }
}

TEST_CASE("orbit examples") {
  const auto harmonic = cross_ratio_orbit(-1.0);
  CHECK(harmonic.size() == 3);
  CHECK(harmonic.contains(2.0));
  CHECK(harmonic.contains(0.5));
  CHECK(harmonic.contains(-1.0));

  const auto equi = cross_ratio_orbit(-kRho);
  CHECK(equi.size() == 2);
  CHECK(equi.contains(-kRho));
  CHECK(equi.contains(-kRho2));

  const auto generic = cross_ratio_orbit(3.0);
  CHECK(generic.size() == 6);
  for (const Cx v : {Cx{3.0}, Cx{1.0 / 3.0}, Cx{-2.0}, Cx{-0.5}, Cx{1.5}, Cx{2.0 / 3.0}}) {
    CHECK(generic.contains(v));
  }
  CHECK(error_code([] { cross_ratio_orbit(0.0); }) == Errc::DomainError);
  CHECK(error_code([] { cross_ratio_orbit(1.0); }) == Errc::DomainError);
}

TEST_CASE("literal orbit list breaks J constancy") {
  // The list with lambda - 1 in place of 1 - lambda, evaluated at 3.
  const Cx lambda = 3.0;
  const SpherePoint j = j_invariant(lambda);
  const SpherePoint j_literal = j_invariant(lambda - 1.0);
  CHECK(std::abs(j.value() - 343.0 / 36.0) < 1e-12);
  CHECK(std::abs(j_literal.value() - 27.0 / 4.0) < 1e-12);
  CHECK_FALSE(j_values_equal(j, j_literal));
  const auto orbit = cross_ratio_orbit(lambda);
  for (const Cx v : orbit.values()) CHECK(j_values_equal(j_invariant(v), j));
}

TEST_CASE("canonicalize") {
  const auto c1 = canonicalize(FourPoints(0.0, 1.0, kInf, 7.0));
  CHECK(std::abs(c1.lambda - 7.0) < 1e-15);
  CHECK(c1.map.approx_equal(MoebiusMap::identity()));

  const FourPoints pts(2.0, 4.0, kInf, 0.0);
  const auto c2 = canonicalize(pts);
  CHECK(std::abs(c2.lambda - cross_ratio(pts)) < 1e-15);
  CHECK(maps_to(c2.map, pts[0], 0.0));
  CHECK(maps_to(c2.map, pts[1], 1.0));
  CHECK(maps_to(c2.map, pts[2], kInf));
  CHECK(maps_to(c2.map, pts[3], c2.lambda));

  CHECK(std::abs(canonicalize(FourPoints(1.0, I, -1.0, -I)).lambda + 1.0) < 1e-15);
}

TEST_CASE("klein involutions") {
  const Cx a = 2.0;
  const FourPoints sym(a, -1.0 / a, -a, 1.0 / a);
  const auto inv = klein_involutions(sym);
  CHECK(swaps(inv[0], sym, 0, 1, 2, 3));
  CHECK(swaps(inv[1], sym, 0, 2, 1, 3));
  CHECK(swaps(inv[2], sym, 0, 3, 1, 2));
  CHECK(inv[1].approx_equal(MoebiusMap(-1.0, 0.0, 0.0, 1.0)));

  const Cx lambda{0.4, 1.3};
  const FourPoints std_set(0.0, 1.0, kInf, lambda);
  const auto s = klein_involutions(std_set);
  // 0 <-> 1 and inf <-> lambda, solved by hand.
  CHECK(s[0].approx_equal(MoebiusMap(lambda, -lambda, 1.0, -lambda)));

  const FourPoints square(1.0, -1.0, I, -I);
  const auto q = klein_involutions(square);
  CHECK(q[0].approx_equal(MoebiusMap(-1.0, 0.0, 0.0, 1.0)));
  CHECK(q[1].approx_equal(MoebiusMap(0.0, I, 1.0, 0.0)));
  CHECK(q[2].approx_equal(MoebiusMap(0.0, -I, 1.0, 0.0)));
  // z -> 1/z preserves the set but fixes 1 and -1, so it is not among them.
  for (const auto& m : q) CHECK_FALSE(m.approx_equal(MoebiusMap(0.0, 1.0, 1.0, 0.0)));
  for (const auto& m : q) CHECK((m * m).approx_equal(MoebiusMap::identity()));
}

TEST_CASE("affine reduction") {
  const Cx lambda{0.3, 0.8};
  const auto scale = affine_reduction(FourPoints(0.0, 1.0, lambda, kInf),
                                      FourPoints(0.0, 2.0, 2.0 * lambda, kInf));
  REQUIRE(scale.has_value());
  CHECK(std::abs(scale->a - 2.0) < 1e-12);
  CHECK(std::abs(scale->b) < 1e-12);

  // Both triples are right isosceles triangles: J(i) = J(1 + i) = 1/2.
  const auto right = affine_reduction(FourPoints(0.0, 1.0, I, kInf), FourPoints(0.0, 1.0, 1.0 + I, kInf));
  REQUIRE(right.has_value());
  CHECK(std::abs(j_invariant(I).value() - 0.5) < 1e-15);
  CHECK(std::abs(j_invariant(1.0 + I).value() - 0.5) < 1e-15);
  const std::array<Cx, 3> square{0.0, 1.0, 1.0 + I};
  for (const Cx z : {Cx{0.0}, Cx{1.0}, I}) {
    const Cx w = (*right)(z);
    CHECK(std::any_of(square.begin(), square.end(), [&](Cx t) { return std::abs(t - w) < 1e-8; }));
  }
  CHECK_FALSE(affine_reduction(FourPoints(0.0, 1.0, I, kInf), FourPoints(0.0, 1.0, 2.0 + I, kInf))
                  .has_value());

  // Both equilateral (J = 0); the reflection is realized by a rotation.
  const auto eq = affine_reduction(FourPoints(0.0, 1.0, -kRho, kInf),
                                   FourPoints(0.0, 1.0, -kRho2, kInf));
  REQUIRE(eq.has_value());
  const std::array<Cx, 3> image{0.0, 1.0, -kRho2};
  for (const Cx z : {Cx{0.0}, Cx{1.0}, -kRho}) {
    const Cx w = (*eq)(z);
    CHECK(std::any_of(image.begin(), image.end(), [&](Cx t) { return std::abs(t - w) < 1e-8; }));
  }

  CHECK(error_code([] {
          affine_reduction(FourPoints(0.0, 1.0, 2.0, 3.0), FourPoints(0.0, 1.0, 2.0, kInf));
        }) == Errc::PreconditionViolation);
}

}  // TEST_SUITE
