#include "fourpoint/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fourpoint/error.hpp"

namespace fourpoint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Seed of the initial-point perturbation; fixed so solver output is reproducible.
constexpr std::uint32_t kSolverSeed = 0x5eed2024u;

std::vector<Cx> initial_points(const Polynomial& p) {
  const std::size_t n = p.degree();
  const Cx lead = p.leading();
  // Fujiwara-style radius: max |c_i / c_n|^(1/(n-i)).
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = std::abs(p.coeff(i) / lead);
    if (m > 0.0) radius = std::max(radius, std::pow(m, 1.0 / static_cast<double>(n - i)));
  }
  std::mt19937 rng(kSolverSeed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  std::vector<Cx> z(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = step * (static_cast<double>(k) + 0.25 * jitter(rng)) + 0.4;
    const double r = radius * (1.0 + 0.1 * jitter(rng));
    z[k] = std::polar(r, angle);
  }
  return z;
}

// Rounding-noise level of a Horner evaluation at z.
double evaluation_noise(const Polynomial& p, Cx z) noexcept {
  double acc = 0.0;
  const double az = std::abs(z);
  for (std::size_t i = p.degree() + 1; i-- > 0;) acc = acc * az + std::abs(p.coeff(i));
  return 8.0 * kEps * acc;
}

// Replace tight clusters by their centroid when that lowers the residual;
// restores accuracy lost at multiple roots.
void merge_clusters(const Polynomial& p, std::vector<Cx>& roots) {
  const std::size_t n = roots.size();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    const double radius = 1e-4 * std::max(1.0, std::abs(roots[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= radius) members.push_back(j);
    }
    if (members.size() < 2) continue;
    Cx centroid{0.0};
    double worst = 0.0;
    for (auto m : members) {
      centroid += roots[m];
      worst = std::max(worst, std::abs(p(roots[m])));
    }
    centroid /= static_cast<double>(members.size());
    if (std::abs(p(centroid)) <= worst) {
      for (auto m : members) {
        roots[m] = centroid;
        used[m] = true;
      }
    }
  }
}

}  // namespace

bool is_finite(Cx z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool approx_equal(Cx a, Cx b, double tol) noexcept {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

Cx principal_sqrt(Cx z) noexcept { return std::sqrt(z); }

Cx principal_cbrt(Cx z) noexcept {
  if (z == Cx{0.0}) return Cx{0.0};
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

SpherePoint::SpherePoint(Cx z) : value_(z) {
  if (!fourpoint::is_finite(z)) {
    throw Error(Errc::DomainError, "non-finite complex value; use SpherePoint::infinity()");
  }
}

Cx SpherePoint::value() const {
  if (infinite_) throw Error(Errc::DomainError, "point at infinity has no finite value");
  return value_;
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) noexcept {
  if (p.is_infinite() && q.is_infinite()) return 0.0;
  if (p.is_infinite() || q.is_infinite()) {
    const Cx z = p.is_infinite() ? *q.finite() : *p.finite();
    return 1.0 / std::sqrt(1.0 + std::norm(z));
  }
  const Cx z = *p.finite();
  const Cx w = *q.finite();
  return std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

bool approx_equal(const SpherePoint& p, const SpherePoint& q, double tol) noexcept {
  return chordal_distance(p, q) <= tol;
}

double relative_residual(const Polynomial& p, Cx root) noexcept {
  const double scale = (1.0 + p.max_coeff_magnitude()) *
                       std::pow(std::max(1.0, std::abs(root)), static_cast<double>(p.degree()));
  return std::abs(p(root)) / scale;
}

void sort_lexicographic(std::span<Cx> values) noexcept {
  std::sort(values.begin(), values.end(), [](Cx a, Cx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

std::vector<Cx> solve_poly(const Polynomial& p, double tol) {
  const std::size_t n = p.degree();
  if (n < 1 || n > kMaxSolverDegree) {
    throw Error(Errc::UnsupportedDegree,
                "solve_poly supports degrees 1..12, got " + std::to_string(n));
  }
  if (!(tol > 0.0)) throw Error(Errc::DomainError, "solver tolerance must be positive");

  if (n == 1) return {-p.coeff(0) / p.coeff(1)};

  // Zero roots are split off exactly.
  std::size_t zeros = 0;
  while (zeros < n && p.coeff(zeros) == Cx{0.0}) ++zeros;
  std::vector<Cx> roots(zeros, Cx{0.0});
  if (zeros == n) return roots;

  const Polynomial q(std::vector<Cx>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros),
                                     p.coeffs().end()));
  const Polynomial dq = q.derivative();
  const std::size_t m = q.degree();

  std::vector<Cx> z;
  if (m == 1) {
    z = {-q.coeff(0) / q.coeff(1)};
  } else {
    z = initial_points(q);
    std::vector<bool> frozen(m, false);
    for (int iter = 0; iter < kSolverIterationBudget; ++iter) {
      bool active = false;
      for (std::size_t k = 0; k < m; ++k) {
        if (frozen[k]) continue;
        const Cx value = q(z[k]);
        if (std::abs(value) <= evaluation_noise(q, z[k])) {
          frozen[k] = true;
          continue;
        }
        active = true;
        const Cx slope = dq(z[k]);
        Cx repulsion{0.0};
        for (std::size_t j = 0; j < m; ++j) {
          if (j == k) continue;
          const Cx gap = z[k] - z[j];
          if (gap != Cx{0.0}) repulsion += 1.0 / gap;
        }
        Cx step;
        if (slope == Cx{0.0}) {
          step = Cx{1e-8, 1e-8} * std::max(1.0, std::abs(z[k]));
        } else {
          const Cx newton = value / slope;
          const Cx denom = 1.0 - newton * repulsion;
          step = denom == Cx{0.0} ? newton : newton / denom;
        }
        z[k] -= step;
        if (std::abs(step) <= 4.0 * kEps * std::abs(z[k])) frozen[k] = true;
      }
      if (!active) break;
    }
    merge_clusters(q, z);
  }

  for (const Cx r : z) {
    if (!fourpoint::is_finite(r) || relative_residual(p, r) > tol) {
      throw Error(Errc::NonConvergence, "polynomial root residual above tolerance after " +
                                            std::to_string(kSolverIterationBudget) +
                                            " iterations");
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  sort_lexicographic(roots);
  return roots;
}

void CardanoBranch::validate() const {
  if (sqrt_sign != 1 && sqrt_sign != -1) {
    throw Error(Errc::DomainError, "CardanoBranch::sqrt_sign must be +1 or -1");
  }
  if (cbrt_index < 0 || cbrt_index > 2) {
    throw Error(Errc::DomainError, "CardanoBranch::cbrt_index must be 0, 1 or 2");
  }
}

std::array<CardanoBranch, 6> CardanoBranch::all() noexcept {
  return {{{+1, 0}, {+1, 1}, {+1, 2}, {-1, 0}, {-1, 1}, {-1, 2}}};
}

Polynomial hesse_cubic(Cx k) { return Polynomial{4.0, 0.0, -3.0 * k, 1.0}; }

std::array<Cx, 3> hesse_roots(Cx k, CardanoBranch branch) {
  branch.validate();
  const Cx k3 = k * k * k;
  if (std::abs(k3 - 1.0) <= kInvariantTol) {
    throw Error(Errc::DomainError, "Hesse parameter with k^3 = 1");
  }
  const Cx s = static_cast<double>(branch.sqrt_sign) * principal_sqrt(k3 - 1.0);
  const Cx i{0.0, 1.0};
  Cx cube = 2.0 - k3 + 2.0 * i * s;
  // The two sign choices multiply to k^6; take the small one from the
  // large one to avoid cancellation near k = 0.
  const Cx conjugate = 2.0 - k3 - 2.0 * i * s;
  if (std::abs(cube) < std::abs(conjugate)) cube = (k3 * k3) / conjugate;

  Cx alpha = principal_cbrt(cube);
  for (int j = 0; j < branch.cbrt_index; ++j) alpha *= kRho;

  if (std::abs(alpha) < 1e-8 * (1.0 + std::norm(k))) {
    throw Error(Errc::DegenerateAlpha, "closed-form Hesse roots degenerate (alpha ~ 0)");
  }

  std::array<Cx, 3> roots{};
  Cx rotation{1.0};
  for (int v = 0; v < 3; ++v) {
    rotation *= kRho;  // rho^1, rho^2, rho^3
    const Cx t = rotation * alpha;
    roots[static_cast<std::size_t>(v)] = k - t - k * k / t;
  }
  return roots;
}

std::array<Cx, 3> hesse_roots_or_solve(Cx k) {
  std::array<Cx, 3> out{};
  try {
    out = hesse_roots(k);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateAlpha) throw;
    const auto roots = solve_poly(hesse_cubic(k));
    std::copy(roots.begin(), roots.end(), out.begin());
  }
  sort_lexicographic(out);
  return out;
}

Cx discriminant(const Polynomial& p) {
  switch (p.degree()) {
    case 2: {
      const Cx a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
      return b * b - 4.0 * a * c;
    }
    case 3: {
      const Cx a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
      const Cx classical = b * b * c * c - 4.0 * a * c * c * c - 4.0 * b * b * b * d -
                           27.0 * a * a * d * d + 18.0 * a * b * c * d;
      return classical / (a * a);
    }
    default:
      throw Error(Errc::UnsupportedDegree,
                  "discriminant supports degree 2 or 3, got " + std::to_string(p.degree()));
  }
}

}  // namespace fourpoint
