#include <benchmark/benchmark.h>

#include "steintile/copula.hpp"
#include "steintile/group_tiling.hpp"
#include "steintile/lattice.hpp"
#include "steintile/pp1d.hpp"

using namespace steintile;

static void BM_CopulaMinSupport(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const auto n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(copula::min_support_exact(m, n).S);
}
BENCHMARK(BM_CopulaMinSupport)->Args({3, 5})->Args({4, 6})->Args({5, 7})->Args({5, 8});

static void BM_GroupBruteForce(benchmark::State& state) {
  const auto m = state.range(0);
  const auto n = state.range(1);
  const auto g = abelian::FiniteAbelianGroup::product({m, n});
  const abelian::GroupElement a{0, 1};
  const abelian::GroupElement b{1, 0};
  const auto g1 = abelian::subgroup_from_generators(g, std::span(&a, 1));
  const auto g2 = abelian::subgroup_from_generators(g, std::span(&b, 1));
  for (auto _ : state) benchmark::DoNotOptimize(tiling::min_support_bruteforce(g, g1, g2).S);
}
BENCHMARK(BM_GroupBruteForce)->Args({2, 3})->Args({3, 4})->Args({2, 6});

static void BM_ConvolutionTile(benchmark::State& state) {
  std::vector<Rational> lengths;
  for (std::int64_t k = 0; k < state.range(0); ++k) lengths.emplace_back(k + 2, k + 3);
  for (auto _ : state) benchmark::DoNotOptimize(pp1d::convolution_tile(lengths).piece_count());
}
BENCHMARK(BM_ConvolutionTile)->DenseRange(2, 6, 2);

static void BM_HermiteNormalForm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  lattice::IntegerMatrix rows(d, std::vector<Integer>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) rows[i][j] = Integer(static_cast<long>((7 * i + 3 * j * j + 1) % 11) - 5);
    rows[i][i] += 20;
  }
  for (auto _ : state) benchmark::DoNotOptimize(lattice::hermite_normal_form(rows, d).size());
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(2, 8, 2);

static void BM_ManyRelationsFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lattice::many_relations_family(state.range(0), 2).count);
}
BENCHMARK(BM_ManyRelationsFamily)->Arg(3)->Arg(7)->Arg(13);
BENCHMARK_MAIN();
