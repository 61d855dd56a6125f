#include <algorithm>
#include <cmath>

#include "fourpoint/error.hpp"
#include "fourpoint/numerics.hpp"

namespace fourpoint {

Polynomial::Polynomial(std::vector<Cx> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) throw Error(Errc::DomainError, "polynomial needs at least one coefficient");
  for (const Cx c : coeffs_) {
    if (!is_finite(c)) throw Error(Errc::DomainError, "non-finite polynomial coefficient");
  }
  trim();
}

Polynomial Polynomial::from_roots(std::span<const Cx> roots) {
  Polynomial out{Cx{1.0}};
  for (const Cx r : roots) out *= Polynomial{-r, Cx{1.0}};
  return out;
}

Polynomial Polynomial::monomial(std::size_t degree, Cx coefficient) {
  std::vector<Cx> c(degree + 1, Cx{0.0});
  c.back() = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Cx{0.0}) coeffs_.pop_back();
}

double Polynomial::max_coeff_magnitude() const noexcept {
  double m = 0.0;
  for (const Cx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Cx Polynomial::operator()(Cx z) const noexcept {
  Cx acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial{};
  std::vector<Cx> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cx{0.0});
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cx{0.0});
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  std::vector<Cx> out(coeffs_.size() + rhs.coeffs_.size() - 1, Cx{0.0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Cx scalar) {
  for (Cx& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out{Cx{1.0}};
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

}  // namespace fourpoint
