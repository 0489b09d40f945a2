#include <gtest/gtest.h>

#include "steintile/error.hpp"
#include "steintile/group_tiling.hpp"
#include "test_support.hpp"

using namespace steintile;
using namespace steintile::abelian;
using namespace steintile::tiling;

namespace {

Subgroup gen(const FiniteAbelianGroup& g, std::vector<GroupElement> gens) { return subgroup_from_generators(g, gens); }

GroupFunction dense(const FiniteAbelianGroup& g, const std::vector<int>& values) {
  GroupFunction f(g);
  for (std::size_t i = 0; i < values.size(); ++i) f.set(i, Rational(values[i]));
  return f;
}

// Periodized sums computed directly on coordinate tuples.
std::vector<Rational> naive_sums(const GroupFunction& f, const Subgroup& h) {
  const auto& g = f.group();
  std::vector<Rational> sums;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto ex = g.element(x).coordinates;
    Rational s = 0;
    for (const auto& e : h.elements()) {
      std::vector<std::int64_t> y(ex.size());
      for (std::size_t i = 0; i < ex.size(); ++i) {
        const auto d = g.orders()[i];
        y[i] = ((ex[i] - e.coordinates[i]) % d + d) % d;
      }
      s += f.at(GroupElement(y));
    }
    sums.push_back(s);
  }
  return sums;
}

bool naive_tiles(const GroupFunction& f, const Subgroup& h, Rational level) {
  for (const auto& s : naive_sums(f, h)) {
    if (s != level) return false;
  }
  return true;
}

void expect_common_tile(const GroupFunction& f, const Subgroup& g1, const Subgroup& g2) {
  EXPECT_TRUE(naive_tiles(f, g1, Rational(static_cast<long>(g1.order()))));
  EXPECT_TRUE(naive_tiles(f, g2, Rational(static_cast<long>(g2.order()))));
  for (const auto& [x, v] : f.values()) EXPECT_GT(v, 0);
}

}  // namespace

TEST(GroupFunction, StoresOnlyNonzero) {
  const auto g = FiniteAbelianGroup::product({4});
  GroupFunction f(g);
  f.set(1, Rational(2));
  f.set(2, Rational(0));
  f.add(1, Rational(-2));
  EXPECT_EQ(f.support_size(), 0U);
  EXPECT_THROW(f.set(0, Rational(-1)), ValidationError);
  f.set(GroupElement{3}, Rational(5));
  EXPECT_EQ(f.mass(), 5);
  EXPECT_EQ(f.support(), std::vector<std::size_t>{3});
}

TEST(TilingLevel, Examples) {
  const auto z6 = FiniteAbelianGroup::product({6});
  auto check = tiling_level(dense(z6, {1, 1, 1, 1, 1, 1}), gen(z6, {{2}}));
  ASSERT_TRUE(std::holds_alternative<TilingCertificate>(check));
  EXPECT_EQ(std::get<TilingCertificate>(check).level, 3);
  EXPECT_TRUE(std::get<TilingCertificate>(check).normalized);

  check = tiling_level(dense(z6, {2, 2, 2, 0, 0, 0}), gen(z6, {{3}}));
  ASSERT_TRUE(std::holds_alternative<TilingCertificate>(check));
  EXPECT_EQ(std::get<TilingCertificate>(check).level, 2);
  EXPECT_TRUE(std::get<TilingCertificate>(check).normalized);

  const auto z4 = FiniteAbelianGroup::product({4});
  check = tiling_level(dense(z4, {1, 0, 0, 0}), gen(z4, {{2}}));
  ASSERT_TRUE(std::holds_alternative<TilingFailure>(check));
  const auto& fail = std::get<TilingFailure>(check);
  EXPECT_EQ(fail.x, GroupElement{0});
  EXPECT_EQ(fail.sum_at_x, 1);
  EXPECT_EQ(fail.x_prime, GroupElement{1});
  EXPECT_EQ(fail.sum_at_x_prime, 0);
}

TEST(TilingLevelProperty, MatchesNaiveSumsAndMassRule) {
  steintile::testing::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = FiniteAbelianGroup::product({steintile::testing::uniform(rng, 1, 4), steintile::testing::uniform(rng, 1, 6)});
    const auto h = gen(g, {{steintile::testing::uniform(rng, 0, g.orders()[0] - 1),
                            steintile::testing::uniform(rng, 0, g.orders()[1] - 1)}});
    GroupFunction f(g);
    // Half the trials use a function constant on H-cosets' complement, so it tiles.
    const bool planted = trial % 2 == 0;
    const auto cs = cosets(h);
    for (const auto& c : cs) {
      if (planted) {
        f.set(c[static_cast<std::size_t>(steintile::testing::uniform(rng, 0, static_cast<std::int64_t>(c.size()) - 1))],
              Rational(3));
      } else {
        for (auto x : c) f.set(x, Rational(steintile::testing::uniform(rng, 0, 2)));
      }
    }
    const auto sums = naive_sums(f, h);
    const auto check = tiling_level(f, h);
    const bool constant = std::all_of(sums.begin(), sums.end(), [&](const Rational& s) { return s == sums[0]; });
    ASSERT_EQ(std::holds_alternative<TilingCertificate>(check), constant);
    if (constant) {
      const auto& cert = std::get<TilingCertificate>(check);
      EXPECT_EQ(cert.level, sums[0]);
      EXPECT_EQ(cert.level, f.mass() * Rational(static_cast<long>(h.order())) / Rational(static_cast<long>(g.order())));
    } else {
      const auto& fail = std::get<TilingFailure>(check);
      EXPECT_NE(fail.sum_at_x, fail.sum_at_x_prime);
      EXPECT_EQ(sums[g.index_of(fail.x)], fail.sum_at_x);
      EXPECT_EQ(sums[g.index_of(fail.x_prime)], fail.sum_at_x_prime);
    }
    if (planted) {
      EXPECT_TRUE(constant);
    }
  }
}

TEST(MultipleConstruction, Examples) {
  const auto g24 = FiniteAbelianGroup::product({2, 4});
  const auto a = gen(g24, {{1, 0}});
  const auto b = gen(g24, {{0, 1}});
  const auto f = multiple_construction(a, b);
  EXPECT_EQ(f.support_size(), 4U);
  expect_common_tile(f, a, b);

  const auto g22 = FiniteAbelianGroup::product({2, 2});
  const auto diag = multiple_construction(gen(g22, {{1, 0}}), gen(g22, {{0, 1}}));
  EXPECT_EQ(diag.support_size(), 2U);

  const auto g36 = FiniteAbelianGroup::product({3, 6});
  const auto g1 = gen(g36, {{1, 0}});
  const auto g2 = gen(g36, {{0, 1}});
  const auto f36 = multiple_construction(g1, g2);
  EXPECT_EQ(f36.support_size(), 6U);
  expect_common_tile(f36, g1, g2);

  EXPECT_THROW(multiple_construction(gen(g24, {{0, 1}}), gen(g24, {{1, 0}})), ValidationError);
}

TEST(GroupMinSupport, Examples) {
  const auto g36 = FiniteAbelianGroup::product({3, 6});
  auto r = min_support(g36, gen(g36, {{1, 0}}), gen(g36, {{0, 1}}));
  EXPECT_EQ(r.S, 6U);
  expect_common_tile(r.witness, gen(g36, {{1, 0}}), gen(g36, {{0, 1}}));

  const auto g35 = FiniteAbelianGroup::product({3, 5});
  r = min_support(g35, gen(g35, {{1, 0}}), gen(g35, {{0, 1}}));
  EXPECT_EQ(r.S, 7U);
  EXPECT_EQ(min_support_bruteforce(g35, gen(g35, {{1, 0}}), gen(g35, {{0, 1}})).S, 7U);

  const auto z2 = FiniteAbelianGroup::product({2});
  r = min_support(z2, whole_group(z2), whole_group(z2));
  EXPECT_EQ(r.S, 1U);
  EXPECT_EQ(r.witness.at(0), 2);
}

TEST(GroupMinSupportBruteforce, Examples) {
  const auto g22 = FiniteAbelianGroup::product({2, 2});
  const auto r = min_support_bruteforce(g22, gen(g22, {{1, 0}}), gen(g22, {{0, 1}}));
  EXPECT_EQ(r.S, 2U);
  // lexicographically smallest optimal support
  EXPECT_EQ(r.witness.support(), (std::vector<std::size_t>{0, 3}));

  const auto g24 = FiniteAbelianGroup::product({2, 4});
  EXPECT_EQ(min_support_bruteforce(g24, gen(g24, {{1, 0}}), gen(g24, {{0, 1}})).S, 4U);

  const auto big = FiniteAbelianGroup::product({37});
  EXPECT_THROW(min_support_bruteforce(big, whole_group(big), whole_group(big)), CapExceeded);
}

TEST(GroupMinSupportBruteforce, ThreadCountDoesNotChangeResult) {
  const auto g = FiniteAbelianGroup::product({4, 3});
  const auto g1 = gen(g, {{1, 0}});
  const auto g2 = gen(g, {{0, 1}});
  BruteForceOptions one{36, 1};
  BruteForceOptions three{36, 3};
  const auto a = min_support_bruteforce(g, g1, g2, one);
  const auto b = min_support_bruteforce(g, g1, g2, three);
  EXPECT_EQ(a.S, b.S);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(GroupMinSupportProperty, ReductionMatchesBruteForce) {
  // Every pair of cyclic subgroups of a few small groups.
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{8}, {12}, {2, 4}, {3, 3}, {2, 6}}) {
    const auto g = FiniteAbelianGroup::product(orders);
    auto subs = cyclic_subgroups(g);
    subs.push_back(trivial_subgroup(g));
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        const auto fast = min_support(g, a, b);
        const auto slow = min_support_bruteforce(g, a, b);
        ASSERT_EQ(fast.S, slow.S) << g.describe() << " " << a.order() << " " << b.order();
        EXPECT_EQ(fast.witness.support_size(), fast.S);
        expect_common_tile(fast.witness, a, b);
        expect_common_tile(slow.witness, a, b);
        EXPECT_GE(fast.S, std::max(a.index(), b.index()));
      }
    }
  }
}

TEST(ProjectLift, Examples) {
  const auto g = FiniteAbelianGroup::product({4, 2});
  const auto g1 = gen(g, {{1, 0}});
  const auto g2 = gen(g, {{2, 0}, {0, 1}});
  const auto best = min_support(g, g1, g2);
  const auto projected = project_tile(best.witness, g1, g2);
  EXPECT_EQ(projected.gamma.order(), 4U);
  EXPECT_EQ(projected.tile.support_size(), 2U);
  EXPECT_TRUE(tiles_normalized(projected.tile, projected.gamma1));
  EXPECT_TRUE(tiles_normalized(projected.tile, projected.gamma2));
  const auto lifted = lift_tile(projected.tile, g, projected.gamma.kernel());
  EXPECT_EQ(lifted.support_size(), 2U);
  expect_common_tile(lifted, g1, g2);

  // Full collapse.
  GroupFunction ones(g);
  for (std::size_t i = 0; i < g.order(); ++i) ones.set(i, Rational(1));
  const auto collapsed = project_tile(ones, whole_group(g), whole_group(g));
  EXPECT_EQ(collapsed.gamma.order(), 1U);
  EXPECT_EQ(collapsed.tile.support_size(), 1U);
  EXPECT_EQ(collapsed.tile.at(0), 1);
  const auto point = lift_tile(collapsed.tile, g, whole_group(g));
  EXPECT_EQ(point.at(0), 8);

  // Trivial kernel.
  const auto g22 = FiniteAbelianGroup::product({2, 2});
  const auto d = multiple_construction(gen(g22, {{1, 0}}), gen(g22, {{0, 1}}));
  const auto same = project_tile(d, gen(g22, {{1, 0}}), gen(g22, {{0, 1}}));
  EXPECT_EQ(same.gamma.order(), 4U);
  EXPECT_EQ(same.tile.values(), d.values());
  EXPECT_EQ(lift_tile(same.tile, g22, trivial_subgroup(g22)).values(), d.values());

  EXPECT_THROW(project_tile(dense(g22, {1, 0, 0, 0}), gen(g22, {{1, 0}}), gen(g22, {{0, 1}})), ValidationError);
}

TEST(CommonFundamentalDomain, Examples) {
  const auto g22 = FiniteAbelianGroup::product({2, 2});
  // both transversals of the two axes qualify
  const auto axes = common_fundamental_domain(g22, gen(g22, {{1, 0}}), gen(g22, {{0, 1}}));
  EXPECT_TRUE(axes == (std::vector<GroupElement>{{0, 0}, {1, 1}}) || axes == (std::vector<GroupElement>{{0, 1}, {1, 0}}));
  const auto z4 = FiniteAbelianGroup::product({4});
  EXPECT_EQ(common_fundamental_domain(z4, gen(z4, {{2}}), gen(z4, {{2}})), (std::vector<GroupElement>{{0}, {1}}));
  const auto z9 = FiniteAbelianGroup::product({9});
  EXPECT_EQ(common_fundamental_domain(z9, gen(z9, {{3}}), gen(z9, {{3}})),
            (std::vector<GroupElement>{{0}, {1}, {2}}));
  EXPECT_THROW(common_fundamental_domain(z4, gen(z4, {{2}}), whole_group(z4)), ValidationError);
}

TEST(CommonFundamentalDomainProperty, MeetsEveryCosetOnce) {
  const auto g = FiniteAbelianGroup::product({6, 4});
  auto subs = cyclic_subgroups(g);
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      if (a.index() != b.index()) continue;
      const auto dom = common_fundamental_domain(g, a, b);
      for (const auto* h : {&a, &b}) {
        for (const auto& c : cosets(*h)) {
          int hits = 0;
          for (const auto& x : dom) hits += std::binary_search(c.begin(), c.end(), g.index_of(x)) ? 1 : 0;
          EXPECT_EQ(hits, 1);
        }
      }
    }
  }
}

TEST(CyclicTile, LmrThroughCrt) {
  const auto f = cyclic_tile_from_matrix(copula::construct_lmr(2, 1));
  std::vector<Rational> values;
  for (std::size_t x = 0; x < 6; ++x) values.push_back(f.at(x));
  EXPECT_EQ(values, (std::vector<Rational>{1, 0, 0, 1, 2, 2}));
  EXPECT_THROW(cyclic_tile_from_matrix(copula::construct_nw_blocks(2, 4)), ValidationError);
}
