#pragma once

#include <vector>

#include "steintile/rational.hpp"

namespace steintile::pp1d {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed; the zero polynomial has none.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);

  /// x -> p(x + t).
  Polynomial shifted(const Rational& t) const;
  /// x -> p(c x).
  Polynomial dilated(const Rational& c) const;
  /// Antiderivative vanishing at 0.
  Polynomial antiderivative() const;
  /// Composition p(q(x)).
  Polynomial compose(const Polynomial& q) const;

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Definite integral of p over [a, b].
Rational integrate(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace steintile::pp1d
