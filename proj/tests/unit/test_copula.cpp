#include <gtest/gtest.h>

#include <numeric>

#include "steintile/copula.hpp"
#include "steintile/error.hpp"
#include "test_support.hpp"

using namespace steintile;
using namespace steintile::copula;
using steintile::testing::Q;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix ints(const std::vector<std::vector<int>>& rows) {
  Matrix out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (int v : r) out.back().push_back(Rational(v));
  }
  return out;
}

// Supply/demand feasibility: rows supply n, columns demand m; a pattern
// admits a plan iff every row set R satisfies n|R| <= m|N(R)|.
bool hall_feasible(int m, int n, const std::vector<std::uint32_t>& masks) {
  for (std::uint32_t rs = 1; rs < (1U << m); ++rs) {
    std::uint32_t nb = 0;
    int size = 0;
    for (int i = 0; i < m; ++i) {
      if ((rs >> i) & 1U) {
        nb |= masks[static_cast<std::size_t>(i)];
        ++size;
      }
    }
    if (n * size > m * __builtin_popcount(nb)) return false;
  }
  return true;
}

// S(m, n) by scanning every pattern of each size in increasing order.
int oracle_min_support(int m, int n) {
  const int cells = m * n;
  for (int s = 1; s <= cells; ++s) {
    std::vector<int> pick(static_cast<std::size_t>(s));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<std::uint32_t> masks(static_cast<std::size_t>(m), 0);
      for (int c : pick) masks[static_cast<std::size_t>(c / n)] |= 1U << (c % n);
      if (hall_feasible(m, n, masks)) return s;
      int i = s - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == cells - s + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return -1;
}

void expect_valid(const CopulaMatrix& a) {
  for (int i = 0; i < a.m(); ++i) {
    Rational row = 0;
    for (int j = 0; j < a.n(); ++j) {
      row += a.at(i, j);
      EXPECT_GE(a.at(i, j), 0);
      EXPECT_LE(a.at(i, j), std::min(a.m(), a.n()));
    }
    EXPECT_EQ(row, a.n());
  }
  for (int j = 0; j < a.n(); ++j) {
    Rational col = 0;
    for (int i = 0; i < a.m(); ++i) col += a.at(i, j);
    EXPECT_EQ(col, a.m());
  }
}

}  // namespace

TEST(Validate, AcceptsAndRejects) {
  EXPECT_NO_THROW(validate(ints({{2, 0}, {0, 2}}), 2, 2));
  EXPECT_THROW(validate(ints({{1, 2}, {2, 1}}), 2, 2), ValidationError);
  EXPECT_NO_THROW(validate(ints({{1, 2, 0}, {1, 0, 2}}), 2, 3));
  EXPECT_THROW(validate(ints({{3, -1}, {-1, 3}}), 2, 2), ValidationError);
  EXPECT_THROW(validate(ints({{2, 0}}), 2, 2), ValidationError);
  EXPECT_NO_THROW(validate({{Q("1/2"), Q("3/2")}, {Q("3/2"), Q("1/2")}}, 2, 2));
}

TEST(Construct, LmrExamples) {
  EXPECT_EQ(construct_lmr(2, 1).rows(), ints({{1, 2, 0}, {1, 0, 2}}));
  EXPECT_EQ(construct_lmr(3, 1).rows(), ints({{1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}}));
  EXPECT_EQ(construct_lmr(2, 2).rows(), ints({{1, 2, 2, 0, 0}, {1, 0, 0, 2, 2}}));
  EXPECT_EQ(construct_lmr(2, 1).support_size(), 4U);
  EXPECT_THROW(construct_lmr(1, 1), ValidationError);
  EXPECT_THROW(construct_lmr(2, 0), ValidationError);
}

TEST(Construct, NwBlocksExamples) {
  EXPECT_EQ(construct_nw_blocks(4, 6).rows(),
            ints({{4, 2, 0, 0, 0, 0}, {0, 2, 4, 0, 0, 0}, {0, 0, 0, 4, 2, 0}, {0, 0, 0, 0, 2, 4}}));
  EXPECT_EQ(construct_nw_blocks(3, 5).support_size(), 7U);
  EXPECT_EQ(construct_nw_blocks(3, 6).rows(), ints({{3, 3, 0, 0, 0, 0}, {0, 0, 3, 3, 0, 0}, {0, 0, 0, 0, 3, 3}}));
}

TEST(ConstructProperty, SupportsAndMargins) {
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k <= 4; ++k) {
      const auto a = construct_lmr(m, k);
      expect_valid(a);
      EXPECT_EQ(a.support_size(), static_cast<std::size_t>((k + 1) * m));
    }
  }
  for (int m = 1; m <= 9; ++m) {
    for (int n = 1; n <= 9; ++n) {
      const auto a = construct_nw_blocks(m, n);
      expect_valid(a);
      EXPECT_EQ(a.support_size(), static_cast<std::size_t>(m + n - std::gcd(m, n)));
    }
  }
}

TEST(Transport, Examples) {
  const auto diag = transportation_feasible(SupportPattern(2, 2, {{0, 0}, {1, 1}}));
  ASSERT_TRUE(diag.feasible);
  EXPECT_EQ(diag.witness->rows(), ints({{2, 0}, {0, 2}}));
  EXPECT_FALSE(transportation_feasible(SupportPattern(2, 2, {{0, 0}})).feasible);
  EXPECT_TRUE(transportation_feasible(SupportPattern::of(construct_lmr(2, 1))).feasible);
}

TEST(TransportProperty, AgreesWithHallAndWitnessIsIntegral) {
  steintile::testing::Rng rng(21);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = static_cast<int>(steintile::testing::uniform(rng, 1, 5));
    const int n = static_cast<int>(steintile::testing::uniform(rng, 1, 6));
    std::vector<std::uint32_t> masks;
    for (int i = 0; i < m; ++i) masks.push_back(static_cast<std::uint32_t>(steintile::testing::uniform(rng, 0, (1 << n) - 1)));
    const auto p = SupportPattern::from_row_masks(m, n, masks);
    const auto res = transportation_feasible(p);
    ASSERT_EQ(res.feasible, hall_feasible(m, n, masks)) << "trial " << trial;
    if (!res.feasible) continue;
    ++feasible;
    expect_valid(*res.witness);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_TRUE(is_integer(res.witness->at(i, j)));
        if (res.witness->at(i, j) != 0) {
          EXPECT_TRUE(p.contains(i, j));
        }
      }
    }
  }
  EXPECT_GT(feasible, 20);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(support_lower_bound(3, 7), 9);
  EXPECT_EQ(support_lower_bound(4, 6), 8);
  EXPECT_EQ(support_lower_bound(5, 5), 5);
  EXPECT_EQ(support_lower_bound(7, 3), 9);
}

TEST(Canonical, IdempotentAndInvariantUnderPermutation) {
  steintile::testing::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(steintile::testing::uniform(rng, 1, 5));
    const int n = static_cast<int>(steintile::testing::uniform(rng, 1, 6));
    std::vector<std::uint32_t> masks;
    for (int i = 0; i < m; ++i) masks.push_back(static_cast<std::uint32_t>(steintile::testing::uniform(rng, 0, (1 << n) - 1)));
    const auto p = SupportPattern::from_row_masks(m, n, masks);
    const auto c = p.canonical();
    EXPECT_EQ(c.canonical(), c);
    EXPECT_TRUE(c.is_canonical());
    EXPECT_EQ(c.edge_count(), p.edge_count());
    // Feasibility is a permutation invariant.
    EXPECT_EQ(transportation_feasible(c).feasible, transportation_feasible(p).feasible);
    // Degree multisets are preserved.
    std::vector<int> dp;
    std::vector<int> dc;
    for (int i = 0; i < m; ++i) {
      dp.push_back(p.row_degree(i));
      dc.push_back(c.row_degree(i));
    }
    std::sort(dp.begin(), dp.end());
    std::sort(dc.begin(), dc.end());
    EXPECT_EQ(dp, dc);
  }
}

TEST(MinSupport, Examples) {
  EXPECT_EQ(min_support_exact(3, 6).S, 6U);
  EXPECT_EQ(min_support_exact(3, 7).S, 9U);
  const auto r = min_support_exact(3, 5);
  EXPECT_EQ(r.S, 7U);
  EXPECT_EQ(r.witness.support_size(), 7U);
  expect_valid(r.witness);
  EXPECT_EQ(r.lower_bound, 6);
  EXPECT_EQ(r.nw_blocks_support, 7);
}

TEST(MinSupport, Caps) {
  EXPECT_THROW(min_support_exact(9, 9), CapExceeded);
  EXPECT_THROW(min_support_exact(2, 17), CapExceeded);
  EXPECT_THROW(min_support_exact(0, 3), ValidationError);
  SearchOptions tight{3, 3};
  EXPECT_THROW(min_support_exact(3, 4, tight), CapExceeded);
}

TEST(MinSupportProperty, MatchesPatternScanOracle) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto r = min_support_exact(m, n);
      EXPECT_EQ(static_cast<int>(r.S), oracle_min_support(m, n)) << m << "x" << n;
      EXPECT_EQ(r.witness.support_size(), r.S);
      expect_valid(r.witness);
    }
  }
}

TEST(MinSupportProperty, BoundsAndSymmetry) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 7; ++n) {
      const auto r = min_support_exact(m, n);
      EXPECT_GE(static_cast<std::int64_t>(r.S), support_lower_bound(m, n));
      EXPECT_LE(static_cast<int>(r.S), m + n - std::gcd(m, n));
      EXPECT_EQ(r.S, min_support_exact(n, m).S);
      if (n % m == 0 || n % m == 1 % m) {
        EXPECT_EQ(static_cast<std::int64_t>(r.S), support_lower_bound(m, n)) << m << "x" << n;
      }
    }
  }
}
