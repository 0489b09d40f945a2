#include "steintile/repro.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "steintile/abelian.hpp"
#include "steintile/copula.hpp"
#include "steintile/density.hpp"
#include "steintile/error.hpp"
#include "steintile/group_tiling.hpp"
#include "steintile/lattice.hpp"
#include "steintile/pp1d.hpp"

namespace steintile::repro {

namespace {

using serialize::Json;
using serialize::to_json;

using Rng = std::mt19937_64;
using pp1d::Polynomial;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t den = uniform(rng, 1, max_den);
  return Rational(uniform(rng, lo * den, hi * den), den);
}

Rational random_positive(Rng& rng, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t den = uniform(rng, 1, max_den);
  return Rational(uniform(rng, 1, hi * den), den);
}

std::string str(const Rational& q) { return to_string(q); }

// ---------------------------------------------------------------------------
// Copula criteria

CriterionResult ac1(const Options&) {
  CriterionResult r{1, "S(m, km) = km for m in 2..5, k in 1..3", false, 0, 60, "", Json::array()};
  bool ok = true;
  int mismatches = 0;
  for (int m = 2; m <= 5; ++m) {
    for (int k = 1; k <= 3; ++k) {
      const auto res = copula::min_support_exact(m, k * m);
      const bool good = res.S == static_cast<std::size_t>(k * m);
      ok = ok && good;
      mismatches += good ? 0 : 1;
      r.data.push_back({{"m", m}, {"n", k * m}, {"S", res.S}, {"expected", k * m}, {"ok", good}});
    }
  }
  r.passed = ok;
  r.detail = "12 instances, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CriterionResult ac2(const Options&) {
  CriterionResult r{2, "S(m, km+1) = (k+1)m for m in 2..4, k in 1..2, attained by lmr", false, 0, 600, "",
                    Json::array()};
  bool ok = true;
  int mismatches = 0;
  for (int m = 2; m <= 4; ++m) {
    for (int k = 1; k <= 2; ++k) {
      const int n = k * m + 1;
      const int expected = (k + 1) * m;
      const auto res = copula::min_support_exact(m, n);
      const auto lmr = copula::construct_lmr(m, k);
      const bool good = res.S == static_cast<std::size_t>(expected) &&
                        lmr.support_size() == static_cast<std::size_t>(expected) && lmr.m() == m && lmr.n() == n;
      ok = ok && good;
      mismatches += good ? 0 : 1;
      r.data.push_back({{"m", m},
                        {"k", k},
                        {"n", n},
                        {"S", res.S},
                        {"lmr_support", lmr.support_size()},
                        {"expected", expected},
                        {"ok", good}});
    }
  }
  r.passed = ok;
  r.detail = "6 instances, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CriterionResult ac3(const Options& options) {
  CriterionResult r{3, "copula solver equals brute-force LP oracle on Z_m x Z_n, 2 <= m, n <= 5", false, 0, 600,
                    "", Json::array()};
  bool ok = true;
  int mismatches = 0;
  tiling::BruteForceOptions bf;
  bf.threads = options.threads;
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= 5; ++n) {
      const auto g = abelian::FiniteAbelianGroup::product({m, n});
      const std::vector<abelian::GroupElement> gen1{{0, 1}};
      const std::vector<abelian::GroupElement> gen2{{1, 0}};
      const auto g1 = abelian::subgroup_from_generators(g, gen1);
      const auto g2 = abelian::subgroup_from_generators(g, gen2);
      const auto solver = copula::min_support_exact(m, n);
      const auto oracle = tiling::min_support_bruteforce(g, g1, g2, bf);
      const bool witness_tiles =
          tiling::tiles_normalized(oracle.witness, g1) && tiling::tiles_normalized(oracle.witness, g2);
      const bool good = solver.S == oracle.S && witness_tiles && oracle.witness.support_size() == oracle.S;
      ok = ok && good;
      mismatches += good ? 0 : 1;
      r.data.push_back({{"m", m}, {"n", n}, {"solver", solver.S}, {"bruteforce", oracle.S}, {"ok", good}});
    }
  }
  r.passed = ok;
  r.detail = "16 pairs, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CriterionResult ac4(const Options&) {
  CriterionResult r{4, "lower_bound <= S(m, n) <= m + n - gcd for 2 <= m, n <= 6", false, 0, 900, "",
                    Json::array()};
  bool ok = true;
  int violations = 0;
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      const auto res = copula::min_support_exact(m, n);
      const auto lb = copula::support_lower_bound(m, n);
      const auto ub = m + n - std::gcd(m, n);
      const auto s = static_cast<std::int64_t>(res.S);
      const bool good = lb <= s && s <= ub;
      ok = ok && good;
      violations += good ? 0 : 1;
      r.data.push_back({{"m", m},
                        {"n", n},
                        {"S", res.S},
                        {"lower_bound", lb},
                        {"nw_blocks", ub},
                        {"patterns_tested", res.patterns_tested},
                        {"ok", good}});
    }
  }
  r.passed = ok;
  r.detail = "25 pairs, " + std::to_string(violations) + " outside the bounds";
  return r;
}

// ---------------------------------------------------------------------------
// Group reduction

struct QuotientInstance {
  std::vector<std::int64_t> orders;
  std::vector<abelian::GroupElement> gens1;
  std::vector<abelian::GroupElement> gens2;
};

CriterionResult ac5(const Options& options) {
  CriterionResult r{5, "min_support through the quotient equals brute force on the full group", false, 0, 300, "",
                    Json::array()};
  const std::vector<QuotientInstance> instances{
      {{4, 2}, {{1, 0}}, {{2, 0}, {0, 1}}},
      {{12}, {{2}}, {{3}}},
      {{8}, {{2}}, {{4}}},
      {{2, 4}, {{1, 1}}, {{0, 1}}},
      {{4, 4}, {{1, 0}, {0, 2}}, {{0, 1}}},
      {{3, 6}, {{1, 0}}, {{1, 2}}},
      {{6, 2}, {{2, 1}}, {{3, 0}, {0, 1}}},
  };
  tiling::BruteForceOptions bf;
  bf.threads = options.threads;
  bool ok = true;
  int mismatches = 0;
  for (const auto& inst : instances) {
    const auto g = abelian::FiniteAbelianGroup::product(inst.orders);
    const auto g1 = abelian::subgroup_from_generators(g, inst.gens1);
    const auto g2 = abelian::subgroup_from_generators(g, inst.gens2);
    const auto reduced = tiling::min_support(g, g1, g2);
    const auto direct = tiling::min_support_bruteforce(g, g1, g2, bf);
    const auto calc = abelian::subgroup_calculus(g1, g2);
    const bool tiles = tiling::tiles_normalized(reduced.witness, g1) && tiling::tiles_normalized(reduced.witness, g2);
    const bool good = reduced.S == direct.S && tiles && reduced.witness.support_size() == reduced.S;
    ok = ok && good;
    mismatches += good ? 0 : 1;
    r.data.push_back({{"group", g.describe()},
                      {"g1", to_json(g1)},
                      {"g2", to_json(g2)},
                      {"intersection_order", calc.intersection.order()},
                      {"reduced", reduced.S},
                      {"bruteforce", direct.S},
                      {"ok", good}});
  }
  r.passed = ok && instances.size() >= 5;
  r.detail = std::to_string(instances.size()) + " instances, " + std::to_string(mismatches) + " mismatches";
  return r;
}

// ---------------------------------------------------------------------------
// One-dimensional criteria

CriterionResult ac6(const Options&) {
  CriterionResult r{6, "discrete-to-continuous tiles mZ and (km+1)Z with measure (k+1)m", false, 0, 10, "",
                    Json::array()};
  bool ok = true;
  for (const auto& [m, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    const int n = k * m + 1;
    const auto f = tiling::cyclic_tile_from_matrix(copula::construct_lmr(m, k));
    const auto F = pp1d::discrete_to_continuous(f, m, n);
    const auto at_m = pp1d::tiling_level_1d(F, Rational(m));
    const auto at_n = pp1d::tiling_level_1d(F, Rational(n));
    const auto stats = pp1d::support_stats(F);
    const auto conv = pp1d::support_stats(pp1d::convolution_tile({Rational(m), Rational(n)}));
    const bool good = at_m.level == Rational(n) && at_n.level == Rational(m) && stats.measure == Rational((k + 1) * m) &&
                      conv.measure == Rational((k + 1) * m + 1) && conv.measure - stats.measure == 1;
    ok = ok && good;
    r.data.push_back({{"m", m},
                      {"k", k},
                      {"level_mZ", at_m.level ? Json(str(*at_m.level)) : Json(nullptr)},
                      {"level_nZ", at_n.level ? Json(str(*at_n.level)) : Json(nullptr)},
                      {"measure", str(stats.measure)},
                      {"convolution_measure", str(conv.measure)},
                      {"ok", good}});
  }
  r.passed = ok;
  r.detail = ok ? "3 instances exact" : "mismatch, see data";
  return r;
}

bool nonnegative(const pp1d::RationalPiecewisePoly& f) {
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const auto& p = f.pieces()[i];
    const auto iv = f.piece_interval(i);
    if (p.degree() > 1) return false;  // not needed by any construction here
    if (p(iv.from) < 0 || p(iv.to) < 0) return false;
  }
  return true;
}

CriterionResult ac7(const Options&) {
  CriterionResult r{7, "nonnegative common tiles of Z and alpha Z have measure >= ceil(1/alpha) alpha", false, 0, 30,
                    "", Json::array()};
  bool ok = true;
  for (const char* text : {"1/2", "2/3", "3/4", "9/10"}) {
    const Rational alpha = parse_rational(text);
    const int a = static_cast<int>(to_int64(numerator_of(alpha)));
    const int b = static_cast<int>(to_int64(denominator_of(alpha)));
    const Rational bound = pp1d::steinhaus_lb(alpha);

    std::vector<std::pair<std::string, pp1d::RationalPiecewisePoly>> tiles;
    tiles.emplace_back("convolution", pp1d::convolution_tile({Rational(1), alpha}));
    // Matrices in A(a, b) on Z_{ab}, moved to the line and shrunk by b.
    std::vector<std::pair<std::string, copula::CopulaMatrix>> matrices;
    matrices.emplace_back("nw_blocks", copula::construct_nw_blocks(a, b));
    if (a >= 2 && (b - 1) % a == 0) matrices.emplace_back("lmr", copula::construct_lmr(a, (b - 1) / a));
    try {
      matrices.emplace_back("min_support", copula::min_support_exact(a, b).witness);
    } catch (const CapExceeded&) {
    }
    for (const auto& [name, matrix] : matrices) {
      const auto F = pp1d::discrete_to_continuous(tiling::cyclic_tile_from_matrix(matrix), a, b);
      tiles.emplace_back(name, pp1d::dilate(F, Rational(1, b)));
    }

    for (const auto& [name, tile] : tiles) {
      const bool tiles_both = pp1d::tiling_level_1d(tile, Rational(1)).tiles() && pp1d::tiling_level_1d(tile, alpha).tiles();
      const auto measure = pp1d::support_stats(tile).measure;
      const bool good = tiles_both && nonnegative(tile) && measure >= bound;
      ok = ok && good;
      r.data.push_back({{"alpha", text},
                        {"construction", name},
                        {"measure", str(measure)},
                        {"lower_bound", str(bound)},
                        {"tight", measure == bound},
                        {"ok", good}});
    }
  }
  r.passed = ok;
  r.detail = std::to_string(r.data.size()) + " constructed tiles checked";
  return r;
}

// ---------------------------------------------------------------------------
// Lattice criteria

CriterionResult ac8(const Options&) {
  CriterionResult r{8, "many-relations family: count p+1, volume p, box multiplicity p", false, 0, 120, "",
                    Json::array()};
  bool ok = true;
  for (std::int64_t p : {3, 5, 7}) {
    const auto family = lattice::many_relations_family(p, 2);
    const auto check = lattice::verify_many_relations(family, 100, static_cast<std::uint64_t>(p) * 7919U);
    const auto pu = static_cast<std::uint64_t>(p);
    const bool good = family.count == static_cast<std::size_t>(p + 1) && family.volume == Rational(p) &&
                      check.volumes_match && check.contains_base_lattice && check.min_multiplicity == pu &&
                      check.max_multiplicity == pu;
    ok = ok && good;
    r.data.push_back({{"p", p},
                      {"count", family.count},
                      {"volume", str(family.volume)},
                      {"samples_per_lattice", check.samples_per_lattice},
                      {"min_multiplicity", check.min_multiplicity},
                      {"max_multiplicity", check.max_multiplicity},
                      {"ok", good}});
  }
  r.passed = ok;
  r.detail = "p in {3,5,7}, 100 points per lattice";
  return r;
}

CriterionResult ac9(const Options&) {
  CriterionResult r{9, "Minkowski sum of N boxes of volume >= 1 has volume >= N^d", false, 0, 10, "", Json::array()};
  Rng rng(20240901);
  bool ok = true;
  for (int family = 0; family < 20; ++family) {
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto count = uniform(rng, 1, 6);
    std::vector<lattice::Box> boxes;
    for (std::int64_t j = 0; j < count; ++j) {
      lattice::RationalVector sides;
      for (std::size_t i = 0; i < d; ++i) sides.push_back(random_positive(rng, 4, 5));
      lattice::Box box = lattice::make_box(sides);
      const Rational v = box.volume();
      if (v < 1) box.sides.back() /= v;
      boxes.push_back(std::move(box));
    }
    const auto stats = lattice::box_convolution_stats(boxes);
    Rational bound = 1;
    for (std::size_t i = 0; i < d; ++i) bound *= count;
    const bool good = stats.volume >= bound;
    ok = ok && good;
    r.data.push_back({{"d", d}, {"N", count}, {"volume", str(stats.volume)}, {"bound", str(bound)}, {"ok", good}});
  }
  r.passed = ok;
  r.detail = "20 random families";
  return r;
}

// ---------------------------------------------------------------------------
// Density

CriterionResult ac10(const Options&) {
  CriterionResult r{10, "exact densities, sieve agreement within 2^N, decreasing trend", false, 0, 120, "", Json()};
  constexpr std::int64_t X = 1'000'000;
  const Rational d2 = density::multiples_density_exact(2);
  const Rational d3 = density::multiples_density_exact(3);
  bool ok = d2 == Rational(1, 2) && d3 == Rational(7, 15);

  Json agreement = Json::array();
  for (std::int64_t N = 1; N <= 12; ++N) {
    const auto report = density::density_report(N, X);
    const bool good = *report.deviation <= Rational(std::int64_t{1} << N);
    ok = ok && good;
    agreement.push_back({{"N", N}, {"sieve", report.sieve_count}, {"exact", str(*report.exact_density)},
                         {"deviation", str(*report.deviation)}, {"ok", good}});
  }
  Json trend = Json::array();
  std::string trend_text;
  bool decreasing = true;
  std::uint64_t previous = 0;
  bool first = true;
  for (std::int64_t N : {5, 10, 25, 50}) {
    const auto count = density::multiples_count_sieve(N, X);
    if (!first && !(count < previous)) decreasing = false;
    first = false;
    previous = count;
    trend_text += (trend_text.empty() ? "" : " ") + std::to_string(N) + ":" + std::to_string(count);
    trend.push_back({{"N", N}, {"count", count}, {"density", str(Rational(static_cast<long long>(count), X))}});
  }
  r.data = {{"density_2", str(d2)},
            {"density_3", str(d3)},
            {"agreement", agreement},
            {"trend", trend},
            {"trend_strictly_decreasing", decreasing}};
  r.passed = ok && decreasing;
  r.detail = "density(2) = " + str(d2) + ", density(3) = " + str(d3) + ", agreement " + (ok ? "ok" : "FAILED") +
             ", counts at X = 1e6 " + trend_text + (decreasing ? " decreasing" : " NOT strictly decreasing");
  return r;
}

// ---------------------------------------------------------------------------
// pp1d properties

Polynomial random_polynomial(Rng& rng, int max_degree) {
  std::vector<Rational> coeffs;
  const auto degree = uniform(rng, 0, max_degree);
  for (std::int64_t i = 0; i <= degree; ++i) coeffs.push_back(random_rational(rng, -3, 3, 3));
  return Polynomial(std::move(coeffs));
}

std::vector<Rational> random_breakpoints(Rng& rng) {
  std::vector<Rational> bps{random_rational(rng, -2, 2, 3)};
  const auto pieces = uniform(rng, 1, 3);
  for (std::int64_t i = 0; i < pieces; ++i) bps.push_back(bps.back() + random_positive(rng, 2, 3));
  return bps;
}

pp1d::RationalPiecewisePoly random_signed(Rng& rng) {
  for (;;) {
    auto bps = random_breakpoints(rng);
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) pieces.push_back(random_polynomial(rng, 2));
    pp1d::RationalPiecewisePoly f(std::move(bps), std::move(pieces));
    if (!f.is_zero()) return f;
  }
}

// Piecewise linear, nonnegative at both ends of every piece.
pp1d::RationalPiecewisePoly random_nonnegative(Rng& rng) {
  for (;;) {
    auto bps = random_breakpoints(rng);
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      const Rational va = random_rational(rng, 0, 3, 2);
      const Rational vb = random_rational(rng, 0, 3, 2);
      const Rational slope = (vb - va) / (bps[i + 1] - bps[i]);
      pieces.push_back(Polynomial({va - slope * bps[i], slope}));
    }
    pp1d::RationalPiecewisePoly f(std::move(bps), std::move(pieces));
    if (!f.is_zero()) return f;
  }
}

CriterionResult ac11(const Options&) {
  CriterionResult r{11, "pp1d properties over 100 random exact instances each", false, 0, 120, "", Json()};
  constexpr int kInstances = 100;
  Rng rng(77);
  int mass_ok = 0;
  int fold_ok = 0;
  int level_ok = 0;
  int diameter_ok = 0;
  for (int i = 0; i < kInstances; ++i) {
    const auto f = random_signed(rng);
    const auto g = random_signed(rng);
    if (pp1d::convolve(f, g).integral() == f.integral() * g.integral()) ++mass_ok;

    const Rational lambda = random_positive(rng, 2, 4);
    if (pp1d::fold(f, lambda).integral() == f.integral()) ++fold_ok;

    const auto tile = pp1d::convolve(pp1d::indicator(0, lambda), g);
    const auto level = pp1d::tiling_level_1d(tile, lambda);
    if (level.tiles() && *level.level == tile.integral() / lambda) ++level_ok;

    const auto u = random_nonnegative(rng);
    const auto v = random_nonnegative(rng);
    const auto su = pp1d::support_stats(u);
    const auto sv = pp1d::support_stats(v);
    const auto suv = pp1d::support_stats(pp1d::convolve(u, v));
    if (suv.diameter == su.diameter + sv.diameter && suv.hull.from == su.hull.from + sv.hull.from) ++diameter_ok;
  }
  r.data = {{"instances", kInstances},
            {"mass_multiplicativity", mass_ok},
            {"fold_mass", fold_ok},
            {"tiling_level", level_ok},
            {"diameter_additivity", diameter_ok}};
  r.passed = mass_ok == kInstances && fold_ok == kInstances && level_ok == kInstances && diameter_ok == kInstances;
  r.detail = "passed " + std::to_string(mass_ok) + "/" + std::to_string(fold_ok) + "/" + std::to_string(level_ok) +
             "/" + std::to_string(diameter_ok) + " of " + std::to_string(kInstances);
  return r;
}

// ---------------------------------------------------------------------------
// Lattice algebra

lattice::RationalLattice random_lattice(Rng& rng, std::size_t d) {
  for (;;) {
    lattice::RationalMatrix basis(d, lattice::RationalVector(d));
    for (auto& row : basis) {
      for (auto& x : row) x = random_rational(rng, -4, 4, 4);
    }
    try {
      return lattice::make_lattice(basis);
    } catch (const ValidationError&) {
      // singular; draw again
    }
  }
}

CriterionResult ac12(const Options&) {
  CriterionResult r{12, "dual involution, volume identity and duality of sum and intersection", false, 0, 60, "",
                    Json()};
  constexpr int kPairs = 60;
  Rng rng(12345);
  int involution = 0;
  int volume = 0;
  int duality = 0;
  for (int i = 0; i < kPairs; ++i) {
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto a = random_lattice(rng, d);
    const auto b = random_lattice(rng, d);
    const auto da = lattice::dual(a);
    if (lattice::dual(da) == a && da.volume() * a.volume() == 1) ++involution;
    const auto si = lattice::sum_and_intersection(a, b);
    if (si.sum.volume() * si.intersection.volume() == a.volume() * b.volume()) ++volume;
    const auto dual_sum = lattice::sum_and_intersection(da, lattice::dual(b)).sum;
    if (lattice::dual(si.intersection) == dual_sum) ++duality;
  }
  r.data = {{"pairs", kPairs}, {"dual_involution", involution}, {"volume_identity", volume}, {"duality", duality}};
  r.passed = involution == kPairs && volume == kPairs && duality == kPairs;
  r.detail = "passed " + std::to_string(involution) + "/" + std::to_string(volume) + "/" + std::to_string(duality) +
             " of " + std::to_string(kPairs);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  using Fn = CriterionResult (*)(const Options&);
  static const Fn table[kCriterionCount] = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11, ac12};
  if (id < 1 || id > kCriterionCount) throw ValidationError("no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = table[id - 1](options);
  } catch (const std::exception& e) {
    result.id = id;
    result.title = "criterion " + std::to_string(id);
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.budget_seconds > 0 && result.seconds > result.budget_seconds) {
    result.passed = false;
    result.detail += " (over the " + serialize::decimal(result.budget_seconds) + "s budget)";
  }
  return result;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    results.push_back(run_criterion(id, options));
    if (options.on_result) options.on_result(results.back());
  }
  return results;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "AC" << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << r.seconds << "s " << r.title << ": "
      << r.detail;
  return out.str();
}

std::string copula_table_csv(const Json& ac4_data) {
  int max_m = 0;
  int max_n = 0;
  for (const auto& row : ac4_data) {
    max_m = std::max(max_m, row.at("m").get<int>());
    max_n = std::max(max_n, row.at("n").get<int>());
  }
  std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(max_m + 1),
                                             std::vector<std::string>(static_cast<std::size_t>(max_n + 1)));
  for (const auto& row : ac4_data) {
    grid[row.at("m").get<std::size_t>()][row.at("n").get<std::size_t>()] = std::to_string(row.at("S").get<int>());
  }
  std::string out = "m\\n";
  for (int n = 2; n <= max_n; ++n) out += ',' + std::to_string(n);
  out += '\n';
  for (int m = 2; m <= max_m; ++m) {
    out += std::to_string(m);
    for (int n = 2; n <= max_n; ++n) out += ',' + grid[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
    out += '\n';
  }
  return out;
}

void write_report(const std::string& dir, const std::vector<CriterionResult>& results) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Json summary = Json::array();
  for (const auto& r : results) {
    Json entry{{"id", r.id},
               {"title", r.title},
               {"passed", r.passed},
               {"seconds", serialize::decimal(r.seconds)},
               {"budget_seconds", serialize::decimal(r.budget_seconds)},
               {"detail", r.detail}};
    summary.push_back(entry);
    entry["data"] = r.data;
    std::ofstream(fs::path(dir) / ("ac" + std::to_string(r.id) + ".json")) << entry.dump(2) << '\n';
    if (r.id == 4 && r.data.is_array() && !r.data.empty()) {
      std::ofstream(fs::path(dir) / "copula_table.csv") << copula_table_csv(r.data);
    }
  }
  std::ofstream(fs::path(dir) / "summary.json") << summary.dump(2) << '\n';
}

}  // namespace steintile::repro
