#include "steintile/polynomial.hpp"

#include <algorithm>

namespace steintile::pp1d {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return {};
  std::vector<Rational> out = coeffs_;
  for (auto& a : out) a *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  // Horner in the polynomial ring.
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

Polynomial Polynomial::shifted(const Rational& t) const { return compose(Polynomial({t, Rational(1)})); }

Polynomial Polynomial::dilated(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational power = 1;
  for (auto& a : out) {
    a *= power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return Polynomial(std::move(out));
}

Rational integrate(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial anti = p.antiderivative();
  return anti(b) - anti(a);
}

}  // namespace steintile::pp1d
