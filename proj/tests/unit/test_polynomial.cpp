#include <gtest/gtest.h>

#include "steintile/polynomial.hpp"
#include "test_support.hpp"

using namespace steintile;
using steintile::pp1d::Polynomial;
using steintile::testing::Q;

namespace {

Polynomial random_poly(steintile::testing::Rng& rng) {
  std::vector<Rational> c;
  const auto deg = steintile::testing::uniform(rng, 0, 4);
  for (std::int64_t i = 0; i <= deg; ++i) c.push_back(steintile::testing::random_rational(rng, -5, 5, 4));
  return Polynomial(c);
}

// sum c_i x^i with explicit powers.
Rational eval_powers(const Polynomial& p, const Rational& x) {
  Rational total = 0;
  Rational power = 1;
  for (const auto& c : p.coefficients()) {
    total += c * power;
    power *= x;
  }
  return total;
}

}  // namespace

TEST(Polynomial, TrimsAndEvaluates) {
  const Polynomial p({Rational(1), Rational(0), Rational(2), Rational(0)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Q("1/2")), Q("3/2"));
  EXPECT_TRUE(Polynomial({Rational(0)}).is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial::monomial(Q("3"), 2)(Rational(2)), 12);
}

TEST(Polynomial, IntegrateExamples) {
  const Polynomial x = Polynomial::monomial(1, 1);
  EXPECT_EQ(pp1d::integrate(x, 0, 2), 2);
  EXPECT_EQ(pp1d::integrate(x * x, 0, 3), 9);
  EXPECT_EQ(pp1d::integrate(Polynomial::constant(Q("1/2")), Q("1/3"), 1), Q("1/3"));
}

TEST(PolynomialProperty, RingLawsAndTransforms) {
  steintile::testing::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const auto x = steintile::testing::random_rational(rng, -3, 3, 5);
    const auto t = steintile::testing::random_rational(rng, -3, 3, 5);
    const auto c = steintile::testing::random_rational(rng, -3, 3, 5);
    EXPECT_EQ(p(x), eval_powers(p, x));
    EXPECT_EQ((p + q)(x), p(x) + q(x));
    EXPECT_EQ((p - q)(x), p(x) - q(x));
    EXPECT_EQ((p * q)(x), p(x) * q(x));
    EXPECT_EQ((p * c)(x), p(x) * c);
    EXPECT_EQ(p.shifted(t)(x), p(x + t));
    EXPECT_EQ(p.dilated(c)(x), p(c * x));
    EXPECT_EQ(p.compose(q)(x), p(q(x)));
    const auto anti = p.antiderivative();
    EXPECT_EQ(anti(0), 0);
    EXPECT_EQ(pp1d::integrate(p, t, x), anti(x) - anti(t));
    // derivative of the antiderivative returns p
    std::vector<Rational> back;
    for (std::size_t k = 1; k < anti.coefficients().size(); ++k) back.push_back(anti.coefficients()[k] * Rational(static_cast<long>(k)));
    EXPECT_EQ(Polynomial(back), p);
  }
}
