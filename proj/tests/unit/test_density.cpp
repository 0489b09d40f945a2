#include <gtest/gtest.h>

#include <numeric>

#include "steintile/density.hpp"
#include "steintile/error.hpp"
#include "test_support.hpp"

using namespace steintile;
using namespace steintile::density;
using steintile::testing::Q;

namespace {

bool has_divisor_in_window(std::int64_t n, std::int64_t N) {
  for (std::int64_t q = N + 1; q <= 2 * N; ++q) {
    if (n % q == 0) return true;
  }
  return false;
}

std::uint64_t brute_count(std::int64_t N, std::int64_t X) {
  std::uint64_t c = 0;
  for (std::int64_t n = 1; n <= X; ++n) c += has_divisor_in_window(n, N) ? 1 : 0;
  return c;
}

}  // namespace

TEST(Density, ExactExamples) {
  EXPECT_EQ(multiples_density_exact(1), Q("1/2"));
  EXPECT_EQ(multiples_density_exact(2), Q("1/2"));
  EXPECT_EQ(multiples_density_exact(3), Q("7/15"));
  EXPECT_THROW(multiples_density_exact(0), ValidationError);
  EXPECT_THROW(multiples_density_exact(kMaxExactN + 1), CapExceeded);
}

TEST(Density, ExactIsPeriodCountOverLcm) {
  for (std::int64_t N = 1; N <= 6; ++N) {
    std::int64_t period = 1;
    for (std::int64_t q = N + 1; q <= 2 * N; ++q) period = std::lcm(period, q);
    EXPECT_EQ(multiples_density_exact(N), Rational(static_cast<long>(brute_count(N, period)), period)) << N;
  }
}

TEST(Density, SieveExamples) {
  EXPECT_EQ(multiples_count_sieve(2, 100), 50U);
  EXPECT_EQ(multiples_count_sieve(3, 60), 28U);
  EXPECT_EQ(multiples_count_sieve(3, 0), 0U);
  EXPECT_THROW(multiples_count_sieve(3, kMaxSieveWindow + 1), CapExceeded);
  EXPECT_THROW(multiples_count_sieve(0, 10), ValidationError);
}

TEST(DensityProperty, CountsAgreeWithBruteForce) {
  steintile::testing::Rng rng(81);
  for (int trial = 0; trial < 40; ++trial) {
    const auto N = steintile::testing::uniform(rng, 1, 12);
    const auto X = steintile::testing::uniform(rng, 0, 3000);
    const auto expected = brute_count(N, X);
    EXPECT_EQ(multiples_count_sieve(N, X), expected);
    EXPECT_EQ(multiples_count_inclusion_exclusion(N, X), expected);
  }
}

TEST(DensityProperty, SieveWithinTwoToTheNOfExact) {
  for (std::int64_t N = 1; N <= 12; ++N) {
    const Rational exact = multiples_density_exact(N);
    for (std::int64_t X : {1000, 12345, 100000}) {
      const Rational dev = abs(Rational(static_cast<long>(multiples_count_sieve(N, X))) - exact * Rational(X));
      EXPECT_LE(dev, Rational(std::int64_t{1} << N));
    }
  }
}

TEST(Density, UnionWindow) {
  EXPECT_EQ(union_count_window(2), 4U);
  EXPECT_EQ(union_count_window(3), 9U);
  for (std::int64_t N = 1; N <= 10; ++N) {
    EXPECT_EQ(union_count_window(N), brute_count(N, 2 * N * N));
    EXPECT_EQ(union_count_window(N), multiples_count_inclusion_exclusion(N, 2 * N * N));
  }
}

TEST(Density, Reference) {
  EXPECT_NEAR(tenenbaum_reference(100), 0.8768, 1e-4);
  EXPECT_THROW(tenenbaum_reference(2), ValidationError);
  EXPECT_THROW(multiples_count_inclusion_exclusion(kMaxInclusionExclusionN + 1, 10), CapExceeded);
}

TEST(Density, Report) {
  const auto r = density_report(3, 60);
  ASSERT_TRUE(r.exact_density);
  EXPECT_EQ(*r.exact_density, Q("7/15"));
  EXPECT_EQ(r.sieve_count, 28U);
  ASSERT_TRUE(r.deviation);
  EXPECT_EQ(*r.deviation, 0);
  ASSERT_TRUE(r.reference_bound);

  const auto big = density_report(20, 1000);
  EXPECT_FALSE(big.exact_density);
  EXPECT_FALSE(big.deviation);
  EXPECT_EQ(big.sieve_count, brute_count(20, 1000));
  EXPECT_FALSE(density_report(2, 100).reference_bound);
}
