#include "selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fourpoint/forms.hpp"
#include "fourpoint/invariants.hpp"

namespace fourpoint::cli {

namespace {

Cx sample_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  while (true) {
    const Cx z{u(rng), u(rng)};
    if (std::abs(z) <= radius) return z;
  }
}

void record(SampledSuite& suite, Cx input, double error) {
  ++suite.samples;
  if (!(error <= suite.tolerance)) ++suite.failures;
  if (!(error <= suite.max_error)) {
    suite.max_error = std::isnan(error) ? INFINITY : error;
    suite.worst_input = input;
  }
}

}  // namespace

SampledSuite check_chain(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SampledSuite suite;
  suite.tolerance = 1e-9;
  while (suite.samples < samples) {
    const Cx lambda = sample_disk(rng, 10.0);
    if (std::abs(lambda) < 1e-3 || std::abs(lambda - 1.0) < 1e-3) continue;
    const Cx j = j_invariant(lambda).value();
    record(suite, lambda, std::abs(j_chain(lambda) - j) / (1.0 + std::abs(j)));
  }
  return suite;
}

SampledSuite check_hesse_phi(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SampledSuite suite;
  suite.tolerance = 1e-8;
  while (suite.samples < samples) {
    const Cx k = sample_disk(rng, 5.0);
    if (std::abs(k * k * k - 1.0) < 1e-2) continue;
    const SpherePoint j = j_of_form(Hesse{k});
    const Cx phi = hesse_phi(k);
    const double error = j.is_infinite()
                             ? INFINITY
                             : std::abs(phi - j.value()) /
                                   (1.0 + std::max(std::abs(phi), std::abs(j.value())));
    record(suite, k, error);
  }
  return suite;
}

}  // namespace fourpoint::cli
