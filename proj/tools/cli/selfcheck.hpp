#pragma once

// Sampled self-check suites behind `fourpoint verify`.

#include <cstddef>
#include <cstdint>

#include "fourpoint/numerics.hpp"

namespace fourpoint::cli {

inline constexpr std::uint64_t kSelfCheckSeed = 20240915;

struct SampledSuite {
  std::size_t samples = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  Cx worst_input{};

  bool passed() const noexcept { return failures == 0; }
};

/// j_chain against j_invariant for lambda uniform in |lambda| <= 10, at
/// least 1e-3 away from 0 and 1; error |chain - J| / (1 + |J|) <= 1e-9.
SampledSuite check_chain(std::size_t samples, std::uint64_t seed = kSelfCheckSeed);

/// hesse_phi against J of {-k} and the roots of z^3 - 3k z^2 + 4 for k
/// uniform in |k| <= 5 with |k^3 - 1| >= 1e-2; error relative to 1 + |J|,
/// bound 1e-8.
SampledSuite check_hesse_phi(std::size_t samples, std::uint64_t seed = kSelfCheckSeed);

}  // namespace fourpoint::cli
