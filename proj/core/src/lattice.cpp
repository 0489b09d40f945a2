#include "steintile/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "steintile/error.hpp"

namespace steintile::lattice {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  // b > 0
  Integer q = a / b;
  if (a < 0 && q * b != a) q -= 1;
  return q;
}

void check_rows(const RationalMatrix& rows, std::size_t dimension) {
  if (dimension == 0) throw ValidationError("lattice dimension must be positive");
  for (const auto& row : rows) {
    if (row.size() != dimension) throw ValidationError("lattice vector has the wrong dimension");
  }
}

// Inverse of a square rational matrix; nullopt when singular.
std::optional<RationalMatrix> invert(const RationalMatrix& a) {
  const std::size_t d = a.size();
  RationalMatrix work = a;
  RationalMatrix inv(d, RationalVector(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && work[pivot][col] == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = work[col][col];
    for (std::size_t j = 0; j < d; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || work[r][col] == 0) continue;
      const Rational f = work[r][col];
      for (std::size_t j = 0; j < d; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

IntegerMatrix hermite_normal_form(IntegerMatrix rows, std::size_t cols) {
  for (const auto& row : rows) {
    if (row.size() != cols) throw ValidationError("integer matrix row has the wrong length");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    // Euclid on column `col` among rows pivot_row.. until one nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) throw ValidationError("lattice generators do not span a full-rank lattice");
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const Integer q = rows[r][col] / rows[pivot_row][col];
        for (std::size_t j = col; j < cols; ++j) rows[r][j] -= q * rows[pivot_row][j];
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pivot_row][col] < 0) {
      for (std::size_t j = col; j < cols; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
    }
    const Integer& pivot = rows[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      const Integer q = floor_div(rows[r][col], pivot);
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) rows[r][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(cols);
  return rows;
}

RationalLattice lattice_from_generators(const RationalMatrix& generators, std::size_t dimension) {
  check_rows(generators, dimension);
  Integer scale = 1;
  for (const auto& row : generators) {
    for (const auto& v : row) scale = lcm(scale, denominator_of(v));
  }
  IntegerMatrix ints;
  ints.reserve(generators.size());
  for (const auto& row : generators) {
    std::vector<Integer> out;
    out.reserve(dimension);
    for (const auto& v : row) out.push_back(numerator_of(v) * (scale / denominator_of(v)));
    ints.push_back(std::move(out));
  }
  IntegerMatrix hnf = hermite_normal_form(std::move(ints), dimension);
  Integer content = scale;
  for (const auto& row : hnf) {
    for (const auto& v : row) content = gcd(content, v);
  }
  if (content != 1) {
    scale /= content;
    for (auto& row : hnf) {
      for (auto& v : row) v /= content;
    }
  }
  return RationalLattice(std::move(scale), std::move(hnf));
}

RationalLattice make_lattice(const RationalMatrix& basis) {
  const std::size_t d = basis.size();
  check_rows(basis, d);
  if (!invert(basis)) throw ValidationError("lattice basis is singular");
  return lattice_from_generators(basis, d);
}

RationalMatrix RationalLattice::basis() const {
  RationalMatrix out;
  for (const auto& row : hnf_) {
    RationalVector v;
    for (const auto& x : row) v.push_back(Rational(x, scale_));
    out.push_back(std::move(v));
  }
  return out;
}

Rational RationalLattice::volume() const {
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < hnf_.size(); ++i) {
    num *= hnf_[i][i];
    den *= scale_;
  }
  return Rational(num, den);
}

bool RationalLattice::contains(const RationalVector& v) const {
  const std::size_t d = dimension();
  if (v.size() != d) throw ValidationError("vector has the wrong dimension");
  std::vector<Integer> w;
  for (const auto& x : v) {
    const Rational scaled = x * Rational(scale_);
    if (!is_integer(scaled)) return false;
    w.push_back(numerator_of(scaled));
  }
  std::vector<Integer> coeff(d);
  for (std::size_t j = 0; j < d; ++j) {
    Integer rest = w[j];
    for (std::size_t i = 0; i < j; ++i) rest -= coeff[i] * hnf_[i][j];
    if (rest % hnf_[j][j] != 0) return false;
    coeff[j] = rest / hnf_[j][j];
  }
  return true;
}

RationalLattice dual(const RationalLattice& lattice) {
  const auto inv = invert(lattice.basis());
  const std::size_t d = lattice.dimension();
  RationalMatrix transposed(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) transposed[i][j] = (*inv)[j][i];
  }
  return make_lattice(transposed);
}

SumAndIntersection sum_and_intersection(const RationalLattice& a, const RationalLattice& b) {
  if (a.dimension() != b.dimension()) throw ValidationError("lattices have different dimensions");
  RationalMatrix stacked = a.basis();
  auto more = b.basis();
  stacked.insert(stacked.end(), more.begin(), more.end());
  RationalLattice sum = lattice_from_generators(stacked, a.dimension());

  RationalMatrix dual_stack = dual(a).basis();
  auto dual_more = dual(b).basis();
  dual_stack.insert(dual_stack.end(), dual_more.begin(), dual_more.end());
  RationalLattice intersection = dual(lattice_from_generators(dual_stack, a.dimension()));
  return {std::move(sum), std::move(intersection)};
}

// ---------------------------------------------------------------------------
// Boxes

Rational Box::volume() const {
  Rational v = 1;
  for (const auto& s : sides) v *= s;
  return v;
}

Box make_box(RationalVector sides) {
  if (sides.empty()) throw ValidationError("box needs at least one side");
  for (const auto& s : sides) {
    if (!(s > 0)) throw ValidationError("box sides must be positive, got " + to_string(s));
  }
  return Box{std::move(sides)};
}

namespace {

std::uint64_t count_points(const RationalLattice& lattice, const RationalVector& lo, const RationalVector& hi,
                           std::size_t axis, std::vector<Integer>& coeff) {
  const auto& h = lattice.hnf();
  const std::size_t d = lattice.dimension();
  if (axis == d) return 1;
  // Coordinate `axis` of the point is (sum_{i<=axis} c_i H[i][axis]) / D.
  Integer partial = 0;
  for (std::size_t i = 0; i < axis; ++i) partial += coeff[i] * h[i][axis];
  const Rational step(h[axis][axis], lattice.scale());
  const Rational offset(partial, lattice.scale());
  // Need lo < offset + c * step <= hi.
  const Integer first = floor_of((lo[axis] - offset) / step) + 1;
  const Integer last = floor_of((hi[axis] - offset) / step);
  std::uint64_t total = 0;
  for (Integer c = first; c <= last; ++c) {
    coeff[axis] = c;
    total += count_points(lattice, lo, hi, axis + 1, coeff);
  }
  return total;
}

}  // namespace

std::uint64_t box_tiling_multiplicity(const RationalLattice& lattice, const Box& box, const RationalVector& x) {
  const std::size_t d = lattice.dimension();
  if (box.sides.size() != d || x.size() != d) throw ValidationError("box, point and lattice dimensions differ");
  // x - l in [0, a) iff l in (x - a, x].
  RationalVector lo(d);
  RationalVector hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = x[i] - box.sides[i];
    hi[i] = x[i];
  }
  std::vector<Integer> coeff(d);
  return count_points(lattice, lo, hi, 0, coeff);
}

BoxConvolutionStats box_convolution_stats(const std::vector<Box>& boxes) {
  if (boxes.empty()) throw ValidationError("box convolution needs at least one box");
  const std::size_t d = boxes.front().sides.size();
  RationalVector sides(d, Rational(0));
  for (const auto& b : boxes) {
    if (b.sides.size() != d) throw ValidationError("boxes have different dimensions");
    for (std::size_t i = 0; i < d; ++i) sides[i] += b.sides[i];
  }
  BoxConvolutionStats stats{Rational(1), Rational(0)};
  for (const auto& s : sides) {
    stats.volume *= s;
    stats.diameter_squared += s * s;
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Many-relations family

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

ManyRelationsFamily many_relations_family(std::int64_t p, std::size_t d, std::uint64_t cap) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (d < 2) throw ValidationError("many-relations family needs d >= 2");
  const auto group = abelian::FiniteAbelianGroup::product(std::vector<std::int64_t>(d, p), cap);
  const auto subgroups = abelian::cyclic_subgroups(group);

  ManyRelationsFamily family;
  family.p = p;
  family.d = d;
  family.count = subgroups.size();
  for (const auto& h : subgroups) {
    const auto gen = group.element(h.generator_indices().front());
    RationalMatrix gens;
    for (std::size_t i = 0; i < d; ++i) {
      RationalVector e(d, Rational(0));
      e[i] = p;
      gens.push_back(std::move(e));
    }
    RationalVector g;
    for (auto c : gen.coordinates) g.push_back(Rational(c));
    gens.push_back(std::move(g));
    family.generators.push_back(gen);
    family.lattices.push_back(lattice_from_generators(gens, d));
  }
  Integer p_pow = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) p_pow *= p;
  family.volume = Rational(p_pow);
  for (const auto& l : family.lattices) {
    if (l.volume() != family.volume) throw Error("many-relations lattice has an unexpected volume");
  }
  family.common_tile = make_box(RationalVector(d, Rational(p)));

  auto& scaled = family.scaled;
  const auto count = static_cast<std::uint64_t>(family.count);
  scaled.volume = family.volume / Rational(count);
  scaled.diameter_squared_numerator = Rational(static_cast<long>(d)) * p * p;
  scaled.diameter_squared_count = count;
  if (d == 2) scaled.tile_diameter_squared = scaled.diameter_squared_numerator / Rational(count);
  const double dd = static_cast<double>(d);
  scaled.tile_diameter_squared_approx =
      dd * static_cast<double>(p) * static_cast<double>(p) / std::pow(static_cast<double>(count), 2.0 / dd);
  const double big_n = std::pow(static_cast<double>(p), dd - 1.0);
  scaled.asymptotic_diameter_approx = std::sqrt(dd) * std::pow(big_n, 1.0 / (dd * (dd - 1.0)));
  return family;
}

FamilyVerification verify_many_relations(const ManyRelationsFamily& family, std::uint64_t samples, std::uint64_t seed) {
  FamilyVerification out;
  out.samples_per_lattice = samples;
  const std::size_t d = family.d;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_dist(1, 12);
  bool first = true;
  for (const auto& lattice : family.lattices) {
    for (std::size_t i = 0; i < d; ++i) {
      RationalVector e(d, Rational(0));
      e[i] = family.p;
      if (!lattice.contains(e)) out.contains_base_lattice = false;
    }
    if (lattice.volume() != family.volume) out.volumes_match = false;
    for (std::uint64_t s = 0; s < samples; ++s) {
      RationalVector x;
      for (std::size_t i = 0; i < d; ++i) {
        const int den = den_dist(rng);
        std::uniform_int_distribution<std::int64_t> num_dist(-3 * family.p * den, 3 * family.p * den);
        x.push_back(Rational(num_dist(rng), den));
      }
      const auto mult = box_tiling_multiplicity(lattice, family.common_tile, x);
      if (first) {
        out.min_multiplicity = out.max_multiplicity = mult;
        first = false;
      }
      out.min_multiplicity = std::min(out.min_multiplicity, mult);
      out.max_multiplicity = std::max(out.max_multiplicity, mult);
    }
  }
  return out;
}

}  // namespace steintile::lattice
