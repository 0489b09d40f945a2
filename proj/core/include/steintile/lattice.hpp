#pragma once

// Full-rank lattices in Q^d. A lattice is stored as (D, H): an integer row
// basis H in Hermite normal form (upper triangular, positive diagonal,
// 0 <= H[i][j] < H[j][j] above the diagonal) and the smallest positive
// integer D with D * lattice contained in Z^d. The lattice is (1/D) * rows(H),
// so the pair is unique per lattice.
//
// Rational lattices of equal dimension are always commensurable: two of them
// never intersect trivially, which is why the generic-position regime of
// multi-lattice tiling is not representable here.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "steintile/abelian.hpp"
#include "steintile/rational.hpp"

namespace steintile::lattice {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

class RationalLattice {
 public:
  std::size_t dimension() const { return hnf_.size(); }
  const Integer& scale() const { return scale_; }
  const IntegerMatrix& hnf() const { return hnf_; }

  /// Canonical basis vectors (rows).
  RationalMatrix basis() const;
  Rational volume() const;
  bool contains(const RationalVector& v) const;

  bool operator==(const RationalLattice&) const = default;

 private:
  friend RationalLattice lattice_from_generators(const RationalMatrix& generators, std::size_t dimension);
  RationalLattice(Integer scale, IntegerMatrix hnf) : scale_(std::move(scale)), hnf_(std::move(hnf)) {}

  Integer scale_;
  IntegerMatrix hnf_;
};

/// Hermite normal form of the row lattice of an integer matrix of rank
/// `cols`. Throws ValidationError when the rows do not span.
IntegerMatrix hermite_normal_form(IntegerMatrix rows, std::size_t cols);

/// Lattice spanned by the rows of a square nonsingular rational matrix.
/// Throws ValidationError when the basis is singular or not square.
RationalLattice make_lattice(const RationalMatrix& basis);

/// Lattice generated by any spanning set of rational row vectors.
RationalLattice lattice_from_generators(const RationalMatrix& generators, std::size_t dimension);

/// Rows of the inverse transpose; volume(dual) = 1/volume.
RationalLattice dual(const RationalLattice& lattice);

struct SumAndIntersection {
  RationalLattice sum;
  RationalLattice intersection;
};

/// Sum from the stacked bases; intersection as dual(dual(L1) + dual(L2)).
SumAndIntersection sum_and_intersection(const RationalLattice& a, const RationalLattice& b);

/// Half-open box [0, a_1) x ... x [0, a_d).
struct Box {
  RationalVector sides;
  Rational volume() const;
};

Box make_box(RationalVector sides);

/// Number of lattice points l with x - l in the box.
std::uint64_t box_tiling_multiplicity(const RationalLattice& lattice, const Box& box, const RationalVector& x);

struct BoxConvolutionStats {
  Rational volume;
  Rational diameter_squared;
};

/// The support of 1_{B1} * ... * 1_{BN} is the box of summed sides.
BoxConvolutionStats box_convolution_stats(const std::vector<Box>& boxes);

struct ScaledFamily {
  /// Common volume after shrinking by count^{1/d}: p^{d-1} / count.
  Rational volume;
  /// d p^2 / count^{2/d}; exact only when d == 2.
  std::optional<Rational> tile_diameter_squared;
  Rational diameter_squared_numerator;  // d p^2
  std::uint64_t diameter_squared_count;  // raised to 2/d in the denominator
  double tile_diameter_squared_approx;
  /// sqrt(d) N^{1/(d(d-1))} with N = p^{d-1}.
  double asymptotic_diameter_approx;
};

struct ManyRelationsFamily {
  std::int64_t p;
  std::size_t d;
  std::vector<abelian::GroupElement> generators;
  std::vector<RationalLattice> lattices;
  std::size_t count;
  Rational volume;  // shared by every member
  Box common_tile;
  ScaledFamily scaled;
};

bool is_prime(std::int64_t p);

/// One lattice (pZ)^d + G per cyclic subgroup G of Z_p^d, ordered by the
/// subgroup's smallest generator.
ManyRelationsFamily many_relations_family(std::int64_t p, std::size_t d,
                                          std::uint64_t cap = abelian::kDefaultEnumerationCap);

struct FamilyVerification {
  bool contains_base_lattice = true;
  bool volumes_match = true;
  std::uint64_t samples_per_lattice = 0;
  std::uint64_t min_multiplicity = 0;
  std::uint64_t max_multiplicity = 0;
};

/// Checks (pZ)^d membership, volumes and the box multiplicity at `samples`
/// seeded random rational points per lattice.
FamilyVerification verify_many_relations(const ManyRelationsFamily& family, std::uint64_t samples, std::uint64_t seed);

}  // namespace steintile::lattice
