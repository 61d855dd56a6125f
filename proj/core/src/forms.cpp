#include "fourpoint/forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fourpoint/error.hpp"
#include "fourpoint/invariants.hpp"

namespace fourpoint {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool near_zero(Cx z, double scale = 1.0) noexcept {
  return std::abs(z) <= kInvariantTol * scale;
}

void require(bool ok, const char* message) {
  if (!ok) throw Error(Errc::InvariantViolation, message);
}

void require_lambda(Cx lambda) {
  if (!is_finite(lambda) || near_zero(lambda) || near_zero(lambda - 1.0)) {
    throw Error(Errc::DomainError, "lambda must be finite and outside {0, 1}");
  }
}

// Candidates ordered by |k|, ties (1e-9 relative) broken by principal argument.
std::vector<Cx> order_candidates(std::vector<Cx> ks) {
  std::vector<Cx> ordered;
  while (!ks.empty()) {
    auto best = ks.begin();
    for (auto it = ks.begin() + 1; it != ks.end(); ++it) {
      const double mb = std::abs(*best), mi = std::abs(*it);
      const double tie = 1e-9 * std::max(1.0, mb);
      if (mi < mb - tie || (std::abs(mi - mb) <= tie && std::arg(*it) < std::arg(*best))) best = it;
    }
    ordered.push_back(*best);
    ks.erase(best);
  }
  return ordered;
}

Cx newton(const Polynomial& p, const Polynomial& dp, Cx root) {
  for (int i = 0; i < 8; ++i) {
    const Cx slope = dp(root);
    if (slope == Cx{0.0}) break;
    const Cx next = root - p(root) / slope;
    if (!is_finite(next) || std::abs(p(next)) >= std::abs(p(root))) break;
    root = next;
  }
  return root;
}

// Newton on p, then on p' in case the root is double: the simple iteration
// stalls near sqrt(eps) there, while a root of p' is found to full precision.
Cx polish(const Polynomial& p, Cx root) {
  const Polynomial dp = p.derivative();
  root = newton(p, dp, root);
  const Cx critical = newton(dp, dp.derivative(), root);
  if (std::abs(critical - root) > 1e-6 * std::max(1.0, std::abs(root))) return root;
  // Accept the critical point when p vanishes there up to rounding.
  double noise = 0.0;
  const double r = std::abs(critical);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) noise = noise * r + std::abs(p.coeffs()[i]);
  return std::abs(p(critical)) <= 64.0 * std::numeric_limits<double>::epsilon() * noise ? critical
                                                                                         : root;
}

}  // namespace

FormKind kind_of(const CurveForm& form) noexcept {
  return static_cast<FormKind>(form.index());
}

std::string_view to_string(FormKind kind) noexcept {
  switch (kind) {
    case FormKind::Weierstrass: return "weierstrass";
    case FormKind::Legendre: return "legendre";
    case FormKind::Jacobi: return "jacobi";
    case FormKind::Symmetric: return "symmetric";
    case FormKind::Edwards: return "edwards";
    case FormKind::Hesse: return "hesse";
  }
  return "unknown";
}

std::optional<FormKind> parse_form_kind(std::string_view name) noexcept {
  for (auto kind : {FormKind::Weierstrass, FormKind::Legendre, FormKind::Jacobi,
                    FormKind::Symmetric, FormKind::Edwards, FormKind::Hesse}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

void validate(const CurveForm& form) {
  std::visit(
      overloaded{
          [](const Weierstrass& f) {
            require(is_finite(f.g2) && is_finite(f.g3), "non-finite Weierstrass coefficient");
            const Cx delta = f.g2 * f.g2 * f.g2 - 27.0 * f.g3 * f.g3;
            const double scale = std::pow(std::abs(f.g2), 3) + 27.0 * std::norm(f.g3);
            require(scale > 0.0 && std::abs(delta) > kInvariantTol * scale,
                    "Weierstrass form needs g2^3 - 27 g3^2 != 0");
          },
          [](const Legendre& f) {
            require(is_finite(f.lambda) && !near_zero(f.lambda) && !near_zero(f.lambda - 1.0),
                    "Legendre form needs lambda outside {0, 1}");
          },
          [](const Jacobi& f) {
            require(is_finite(f.k) && !near_zero(f.k) && !near_zero(f.k * f.k - 1.0),
                    "Jacobi form needs k != 0 and k^2 != 1");
          },
          [](const Symmetric& f) {
            const Cx a2 = f.a * f.a;
            require(is_finite(f.a) && !near_zero(f.a) && !near_zero(a2 * a2 - 1.0),
                    "symmetric form needs a != 0 and a^4 != 1");
          },
          [](const Edwards& f) {
            const Cx a2 = f.a * f.a;
            require(is_finite(f.a) && !near_zero(f.a) && !near_zero(a2 * a2 - 1.0),
                    "Edwards form needs a != 0 and a^4 != 1");
          },
          [](const Hesse& f) {
            require(is_finite(f.k) && !near_zero(f.k * f.k * f.k - 1.0),
                    "Hesse form needs k^3 != 1");
          },
      },
      form);
}

FourPoints branch_points(const CurveForm& form) {
  validate(form);
  const SpherePoint inf = SpherePoint::infinity();
  return std::visit(
      overloaded{
          [&](const Weierstrass& f) {
            const auto r = solve_poly(Polynomial{-f.g3, -f.g2, 0.0, 4.0});
            return FourPoints(r[0], r[1], r[2], inf);
          },
          [&](const Legendre& f) { return FourPoints(0.0, 1.0, inf, f.lambda); },
          [](const Jacobi& f) { return FourPoints(1.0, -1.0, 1.0 / f.k, -1.0 / f.k); },
          [](const Symmetric& f) { return FourPoints(f.a, -1.0 / f.a, -f.a, 1.0 / f.a); },
          [](const Edwards& f) { return FourPoints(f.a, -1.0 / f.a, -f.a, 1.0 / f.a); },
          [](const Hesse& f) {
            const auto r = hesse_roots_or_solve(f.k);
            return FourPoints(r[0], r[1], r[2], -f.k);
          },
      },
      form);
}

Weierstrass weierstrass_from_points(Cx z1, Cx z2, Cx z3) {
  const double scale = std::max({1.0, std::abs(z1), std::abs(z2), std::abs(z3)});
  if (near_zero(z1 - z2, scale) || near_zero(z1 - z3, scale) || near_zero(z2 - z3, scale)) {
    throw Error(Errc::DegenerateInput, "weierstrass_from_points needs distinct points");
  }
  const Cx centroid = (z1 + z2 + z3) / 3.0;
  const Cx e1 = z1 - centroid, e2 = z2 - centroid, e3 = z3 - centroid;
  return {-4.0 * (e1 * e2 + e1 * e3 + e2 * e3), 4.0 * e1 * e2 * e3};
}

Cx legendre_from_points(const FourPoints& pts) { return cross_ratio(pts); }

Cx symmetric_cross_ratio(Cx a) {
  const Cx a2 = a * a;
  if (near_zero(a) || near_zero(a2 * a2 - 1.0)) {
    throw Error(Errc::DomainError, "phi(a) needs a != 0 and a^4 != 1");
  }
  const Cx r = (1.0 - a2) / (1.0 + a2);
  return r * r;
}

Cx symmetric_parameter_from_lambda(Cx lambda) {
  require_lambda(lambda);
  const Cx s = principal_sqrt(lambda);
  for (const Cx root : {s, -s}) {
    const Cx a = principal_sqrt((1.0 - root) / (1.0 + root));
    const Cx a2 = a * a;
    if (!near_zero(a) && !near_zero(a2 * a2 - 1.0)) return a;
  }
  // phi is onto C - {0, 1}; reaching here means lambda sits at a degenerate value.
  throw Error(Errc::DomainError, "no symmetric parameter for lambda");
}

Cx hesse_phi(Cx k) {
  const Cx k3 = k * k * k;
  if (!is_finite(k) || near_zero(k3 - 1.0)) throw Error(Errc::DomainError, "phi(k) needs k^3 != 1");
  const Cx r = k * (k3 + 8.0) / (4.0 * (k3 - 1.0));
  return 27.0 / 4.0 * r * r * r;
}

Cx hesse_from_lambda(Cx lambda) {
  require_lambda(lambda);
  const SpherePoint jp = j_invariant(lambda);
  if (jp.is_infinite()) throw Error(Errc::DomainError, "J(lambda) is infinite");
  const Cx j = jp.value();

  // 27 (k^4 + 8k)^3 - 256 J (k^3 - 1)^3
  const Polynomial numerator = Polynomial{0.0, 8.0, 0.0, 0.0, 1.0}.pow(3) * Cx{27.0};
  const Polynomial denominator = Polynomial{-1.0, 0.0, 0.0, 1.0}.pow(3) * (256.0 * j);
  const Polynomial p = numerator - denominator;

  std::vector<Cx> candidates;
  for (const Cx k : solve_poly(p)) {
    Cx polished = polish(p, k);
    // Clear rounding dust so the argument tie-break sees real axes exactly.
    const double dust = 1e-13 * std::max(1.0, std::abs(polished));
    if (std::abs(polished.real()) <= dust) polished.real(0.0);
    if (std::abs(polished.imag()) <= dust) polished.imag(0.0);
    if (std::abs(polished * polished * polished - 1.0) > 1e-8) candidates.push_back(polished);
  }

  const double bound = 1e-8 * (1.0 + std::abs(j));
  for (const Cx k : order_candidates(std::move(candidates))) {
    if (std::abs(hesse_phi(k) - j) > bound) continue;
    const SpherePoint jk = j_of_points(branch_points(Hesse{k}));
    if (jk.is_finite() && std::abs(jk.value() - j) <= bound) return k;
  }
  throw Error(Errc::NoValidRoot, "no Hesse parameter reproduces J(lambda)");
}

SpherePoint j_of_form(const CurveForm& form) { return j_of_points(branch_points(form)); }

CurveForm convert(const CurveForm& form, FormKind target) {
  validate(form);
  const FormKind source = kind_of(form);
  if (source == target) return form;

  std::optional<Cx> symmetric_a;
  if (const auto* s = std::get_if<Symmetric>(&form)) symmetric_a = s->a;
  if (const auto* e = std::get_if<Edwards>(&form)) symmetric_a = e->a;

  CurveForm out = Legendre{0.0};
  if (symmetric_a && target == FormKind::Jacobi) {
    out = Jacobi{*symmetric_a * *symmetric_a};
  } else if (symmetric_a && target == FormKind::Symmetric) {
    out = Symmetric{*symmetric_a};
  } else if (symmetric_a && target == FormKind::Edwards) {
    out = Edwards{*symmetric_a};
  } else if (source == FormKind::Jacobi &&
             (target == FormKind::Symmetric || target == FormKind::Edwards)) {
    const Cx a = principal_sqrt(std::get<Jacobi>(form).k);
    out = target == FormKind::Symmetric ? CurveForm{Symmetric{a}} : CurveForm{Edwards{a}};
  } else {
    const Cx lambda = source == FormKind::Legendre ? std::get<Legendre>(form).lambda
                                                   : legendre_from_points(branch_points(form));
    switch (target) {
      case FormKind::Weierstrass: out = weierstrass_from_points(0.0, 1.0, lambda); break;
      case FormKind::Legendre: out = Legendre{lambda}; break;
      case FormKind::Jacobi: {
        const Cx a = symmetric_parameter_from_lambda(lambda);
        out = Jacobi{a * a};
        break;
      }
      case FormKind::Symmetric: out = Symmetric{symmetric_parameter_from_lambda(lambda)}; break;
      case FormKind::Edwards: out = Edwards{symmetric_parameter_from_lambda(lambda)}; break;
      case FormKind::Hesse: out = Hesse{hesse_from_lambda(lambda)}; break;
    }
  }
  validate(out);
  return out;
}

bool is_isomorphic(const CurveForm& lhs, const CurveForm& rhs) {
  return j_values_equal(j_of_form(lhs), j_of_form(rhs));
}

}  // namespace fourpoint
