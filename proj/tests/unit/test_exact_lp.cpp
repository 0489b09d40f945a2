#include <gtest/gtest.h>

#include "steintile/exact_lp.hpp"
#include "test_support.hpp"

using namespace steintile;
using steintile::testing::Q;

namespace {

bool satisfies(const lp::EqualitySystem& s, const std::vector<Rational>& x) {
  if (x.size() != s.variables) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < s.variables; ++j) lhs += s.rows[r][j] * x[j];
    if (lhs != s.rhs[r]) return false;
  }
  return true;
}

}  // namespace

TEST(ExactLp, FeasibleSystem) {
  lp::EqualitySystem s{{{1, 1, 0}, {0, 1, 1}}, {Rational(2), Rational(3)}, 3};
  const auto x = lp::find_nonnegative_solution(s);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(s, *x));
}

TEST(ExactLp, InfeasibleBySign) {
  lp::EqualitySystem s{{{1, 1}}, {Rational(-1)}, 2};
  EXPECT_FALSE(lp::find_nonnegative_solution(s));
}

TEST(ExactLp, InfeasibleByConflict) {
  // x + y = 1 and x + y = 2
  lp::EqualitySystem s{{{1, 1}, {1, 1}}, {Rational(1), Rational(2)}, 2};
  EXPECT_FALSE(lp::find_nonnegative_solution(s));
}

TEST(ExactLp, RedundantRowsAndFractions) {
  lp::EqualitySystem s{{{Q("1/2"), Q("1/3")}, {1, Q("2/3")}}, {Q("1/6"), Q("1/3")}, 2};
  const auto x = lp::find_nonnegative_solution(s);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(s, *x));
}

TEST(ExactLp, EmptySystem) {
  lp::EqualitySystem s{{}, {}, 3};
  const auto x = lp::find_nonnegative_solution(s);
  ASSERT_TRUE(x);
  EXPECT_EQ(x->size(), 3U);
}

TEST(ExactLpProperty, PlantedSolutionsAreFound) {
  // b = A x0 for a random x0 >= 0, so the system is feasible by construction.
  steintile::testing::Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(steintile::testing::uniform(rng, 1, 5));
    const auto vars = static_cast<std::size_t>(steintile::testing::uniform(rng, 1, 7));
    lp::EqualitySystem s;
    s.variables = vars;
    std::vector<Rational> x0;
    for (std::size_t j = 0; j < vars; ++j) {
      x0.push_back(steintile::testing::uniform(rng, 0, 2) == 0 ? Rational(0)
                                                                 : steintile::testing::random_rational(rng, 0, 4, 3));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Rational> row;
      Rational b = 0;
      for (std::size_t j = 0; j < vars; ++j) {
        row.push_back(steintile::testing::random_rational(rng, -3, 3, 2));
        b += row.back() * x0[j];
      }
      s.rows.push_back(row);
      s.rhs.push_back(b);
    }
    const auto x = lp::find_nonnegative_solution(s);
    ASSERT_TRUE(x) << "trial " << trial;
    EXPECT_TRUE(satisfies(s, *x));
  }
}
