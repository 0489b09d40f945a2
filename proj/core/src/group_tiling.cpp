#include "steintile/group_tiling.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <string>
#include <thread>

#include "steintile/error.hpp"
#include "steintile/exact_lp.hpp"

namespace steintile::tiling {

void GroupFunction::set(std::size_t index, const Rational& v) {
  if (index >= group_.order()) throw ValidationError("group function index out of range");
  if (v < 0) throw ValidationError("group functions take nonnegative values, got " + to_string(v));
  if (v == 0) {
    values_.erase(index);
  } else {
    values_[index] = v;
  }
}

void GroupFunction::add(std::size_t index, const Rational& v) { set(index, at(index) + v); }

Rational GroupFunction::at(std::size_t index) const {
  auto it = values_.find(index);
  return it == values_.end() ? Rational(0) : it->second;
}

std::vector<std::size_t> GroupFunction::support() const {
  std::vector<std::size_t> out;
  out.reserve(values_.size());
  for (const auto& [x, v] : values_) out.push_back(x);
  return out;
}

Rational GroupFunction::mass() const {
  Rational total = 0;
  for (const auto& [x, v] : values_) total += v;
  return total;
}

// ---------------------------------------------------------------------------

TilingCheck tiling_level(const GroupFunction& f, const Subgroup& h) {
  const auto& group = f.group();
  if (!(h.parent() == group)) throw ValidationError("subgroup and function live on different groups");
  std::vector<Rational> sums(group.order(), Rational(0));
  for (const auto& [y, v] : f.values()) {
    for (auto g : h.element_indices()) sums[group.add(y, g)] += v;
  }
  for (std::size_t x = 1; x < group.order(); ++x) {
    if (sums[x] != sums[0]) {
      return TilingFailure{group.element(0), sums[0], group.element(x), sums[x]};
    }
  }
  const bool normalized = sums[0] == static_cast<long>(h.order());
  return TilingCertificate{h, sums[0], normalized};
}

bool tiles_normalized(const GroupFunction& f, const Subgroup& h) {
  const auto check = tiling_level(f, h);
  const auto* cert = std::get_if<TilingCertificate>(&check);
  return cert && cert->normalized;
}

namespace {

void require_same_parent(const FiniteAbelianGroup& group, const Subgroup& g1, const Subgroup& g2) {
  if (!(g1.parent() == group) || !(g2.parent() == group)) {
    throw ValidationError("subgroups are not subgroups of " + group.describe());
  }
}

}  // namespace

ProjectedTile project_tile(const GroupFunction& f, const Subgroup& g1, const Subgroup& g2) {
  require_same_parent(f.group(), g1, g2);
  if (!tiles_normalized(f, g1)) throw ValidationError("function does not tile with G1 at level |G1|");
  if (!tiles_normalized(f, g2)) throw ValidationError("function does not tile with G2 at level |G2|");
  const auto calc = abelian::subgroup_calculus(g1, g2);
  QuotientGroup gamma = abelian::quotient(f.group(), calc.intersection);
  GroupFunction tile(gamma.group());
  const Rational kernel_size = static_cast<long>(calc.intersection.order());
  for (const auto& [y, v] : f.values()) tile.add(gamma.project_index(y), v / kernel_size);
  Subgroup gamma1 = gamma.project(g1);
  Subgroup gamma2 = gamma.project(g2);
  return ProjectedTile{std::move(gamma), std::move(gamma1), std::move(gamma2), std::move(tile)};
}

GroupFunction lift_tile(const GroupFunction& tile, const FiniteAbelianGroup& group, const Subgroup& kernel) {
  const QuotientGroup gamma = abelian::quotient(group, kernel);
  if (!(tile.group() == gamma.group())) throw ValidationError("tile does not live on G/kernel");
  GroupFunction lifted(group);
  const Rational kernel_size = static_cast<long>(kernel.order());
  for (const auto& [g, v] : tile.values()) lifted.set(gamma.representative_index(g), v * kernel_size);
  return lifted;
}

GroupFunction multiple_construction(const Subgroup& g1, const Subgroup& g2) {
  const auto& group = g1.parent();
  require_same_parent(group, g1, g2);
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  if (n % m != 0) {
    throw ValidationError("|G1| = " + std::to_string(m) + " does not divide |G2| = " + std::to_string(n));
  }
  const auto calc = abelian::subgroup_calculus(g1, g2);
  if (calc.intersection.order() != 1 || calc.sum.order() != group.order()) {
    throw ValidationError("G is not the direct sum of G1 and G2");
  }
  GroupFunction f(group);
  const Rational value = static_cast<long>(m);
  const auto& e1 = g1.element_indices();
  const auto& e2 = g2.element_indices();
  for (std::size_t j = 0; j < n; ++j) f.set(group.add(e1[j % m], e2[j]), value);
  return f;
}

// ---------------------------------------------------------------------------

MinSupport min_support(const FiniteAbelianGroup& group, const Subgroup& g1, const Subgroup& g2,
                       const copula::SearchOptions& search) {
  require_same_parent(group, g1, g2);
  const auto calc = abelian::subgroup_calculus(g1, g2);
  const QuotientGroup gamma = abelian::quotient(group, calc.intersection);
  const Subgroup gamma1 = gamma.project(g1);
  const Subgroup gamma2 = gamma.project(g2);
  const Subgroup inner = abelian::subgroup_calculus(gamma1, gamma2).sum;
  const auto blocks = abelian::cosets(inner);

  const int m = static_cast<int>(gamma1.order());
  const int n = static_cast<int>(gamma2.order());
  const auto exact = copula::min_support_exact(m, n, search);

  // Rows of the matrix are indexed by Gamma1, columns by Gamma2: a Gamma1-coset
  // inside c + (Gamma1 (+) Gamma2) is a column, a Gamma2-coset is a row.
  const auto& quotient_group = gamma.group();
  GroupFunction tile(quotient_group);
  for (const auto& block : blocks) {
    const std::size_t base = block.front();
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        const Rational& v = exact.witness.at(i, j);
        if (v == 0) continue;
        const std::size_t at = quotient_group.add(
            base, quotient_group.add(gamma1.element_indices()[static_cast<std::size_t>(i)],
                                     gamma2.element_indices()[static_cast<std::size_t>(j)]));
        tile.set(at, v);
      }
    }
  }
  GroupFunction witness = lift_tile(tile, group, calc.intersection);
  const std::size_t S = blocks.size() * exact.S;

  if (witness.support_size() != S || !tiles_normalized(witness, g1) || !tiles_normalized(witness, g2)) {
    throw Error("min_support produced an invalid witness");
  }
  if (S < std::max(g1.index(), g2.index())) throw Error("min_support fell below the index bound");
  return MinSupport{S, std::move(witness)};
}

namespace {

// Lexicographic successor of a strictly increasing index combination.
bool next_combination(std::vector<std::size_t>& c, std::size_t universe) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < universe - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct OracleProblem {
  std::vector<std::size_t> coset1;  // element -> G1-coset id
  std::vector<std::size_t> coset2;  // element -> G2-coset id
  std::size_t count1 = 0;
  std::size_t count2 = 0;
  Rational level1;
  Rational level2;

  bool hits_every_coset(const std::vector<std::size_t>& support, std::vector<char>& scratch) const {
    scratch.assign(count1 + count2, 0);
    for (auto y : support) {
      scratch[coset1[y]] = 1;
      scratch[count1 + coset2[y]] = 1;
    }
    return std::all_of(scratch.begin(), scratch.end(), [](char c) { return c != 0; });
  }

  std::optional<std::vector<Rational>> solve(const std::vector<std::size_t>& support) const {
    lp::EqualitySystem system;
    system.variables = support.size();
    system.rows.assign(count1 + count2, std::vector<Rational>(support.size(), Rational(0)));
    system.rhs.assign(count1, level1);
    system.rhs.resize(count1 + count2, level2);
    for (std::size_t v = 0; v < support.size(); ++v) {
      system.rows[coset1[support[v]]][v] = 1;
      system.rows[count1 + coset2[support[v]]][v] = 1;
    }
    return lp::find_nonnegative_solution(system);
  }
};

}  // namespace

MinSupport min_support_bruteforce(const FiniteAbelianGroup& group, const Subgroup& g1, const Subgroup& g2,
                                  const BruteForceOptions& options) {
  require_same_parent(group, g1, g2);
  if (group.order() > options.max_group_order) {
    throw CapExceeded("brute-force oracle is capped at |G| <= " + std::to_string(options.max_group_order));
  }
  OracleProblem problem;
  problem.coset1.assign(group.order(), 0);
  problem.coset2.assign(group.order(), 0);
  const auto c1 = abelian::cosets(g1);
  const auto c2 = abelian::cosets(g2);
  for (std::size_t k = 0; k < c1.size(); ++k) {
    for (auto y : c1[k]) problem.coset1[y] = k;
  }
  for (std::size_t k = 0; k < c2.size(); ++k) {
    for (auto y : c2[k]) problem.coset2[y] = k;
  }
  problem.count1 = c1.size();
  problem.count2 = c2.size();
  problem.level1 = static_cast<long>(g1.order());
  problem.level2 = static_cast<long>(g2.order());

  const unsigned threads = std::max(1U, options.threads);
  constexpr std::size_t kBatch = 2048;

  for (std::size_t s = 1; s <= group.order(); ++s) {
    std::vector<std::size_t> combo(s);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    bool more = true;
    std::vector<char> scratch;
    while (more) {
      // Collect a batch of candidates that pass the coset-hitting filter.
      std::vector<std::vector<std::size_t>> batch;
      while (more && batch.size() < kBatch) {
        if (problem.hits_every_coset(combo, scratch)) batch.push_back(combo);
        more = next_combination(combo, group.order());
      }
      if (batch.empty()) continue;

      std::vector<std::optional<std::vector<Rational>>> solutions(batch.size());
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> first_hit{batch.size()};
      auto worker = [&] {
        for (;;) {
          const std::size_t k = next.fetch_add(1);
          if (k >= batch.size() || k > first_hit.load()) return;
          solutions[k] = problem.solve(batch[k]);
          if (solutions[k]) {
            std::size_t cur = first_hit.load();
            while (k < cur && !first_hit.compare_exchange_weak(cur, k)) {
            }
          }
        }
      };
      if (threads == 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      }
      const std::size_t hit = first_hit.load();
      if (hit == batch.size()) continue;

      GroupFunction witness(group);
      const auto& x = *solutions[hit];
      for (std::size_t v = 0; v < x.size(); ++v) witness.set(batch[hit][v], x[v]);
      if (witness.support_size() != s) throw Error("oracle witness has a smaller support than its size class");
      return MinSupport{s, std::move(witness)};
    }
  }
  throw Error("brute-force oracle found no tile");
}

std::vector<GroupElement> common_fundamental_domain(const FiniteAbelianGroup& group, const Subgroup& g1,
                                                    const Subgroup& g2) {
  require_same_parent(group, g1, g2);
  if (g1.index() != g2.index()) {
    throw ValidationError("common fundamental domain needs [G:G1] == [G:G2], got " + std::to_string(g1.index()) +
                          " and " + std::to_string(g2.index()));
  }
  const auto best = min_support(group, g1, g2);
  const Rational level = static_cast<long>(g1.order());
  std::vector<GroupElement> domain;
  for (const auto& [x, v] : best.witness.values()) {
    if (v != level) throw Error("equal-index witness is not a scaled indicator");
    domain.push_back(group.element(x));
  }
  if (domain.size() != g1.index()) throw Error("equal-index witness has the wrong size");
  return domain;
}

GroupFunction cyclic_tile_from_matrix(const copula::CopulaMatrix& matrix) {
  const auto crt = abelian::crt_iso(matrix.m(), matrix.n());
  GroupFunction f(FiniteAbelianGroup::product({static_cast<std::int64_t>(matrix.m()) * matrix.n()}));
  for (int i = 0; i < matrix.m(); ++i) {
    for (int j = 0; j < matrix.n(); ++j) {
      const Rational& v = matrix.at(i, j);
      if (v != 0) f.set(static_cast<std::size_t>(crt.to_cyclic(i, j)), v);
    }
  }
  return f;
}

}  // namespace steintile::tiling
