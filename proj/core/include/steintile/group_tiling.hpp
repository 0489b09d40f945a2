#pragma once

// Nonnegative functions on finite abelian groups that tile with two subgroups
// at the normalized levels |G1| and |G2|, and the minimal support size
// S^G_{G1,G2} of such functions.

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "steintile/abelian.hpp"
#include "steintile/copula.hpp"
#include "steintile/rational.hpp"

namespace steintile::tiling {

using abelian::FiniteAbelianGroup;
using abelian::GroupElement;
using abelian::QuotientGroup;
using abelian::Subgroup;

/// Nonnegative rational function on a group. Zeros are never stored.
class GroupFunction {
 public:
  explicit GroupFunction(FiniteAbelianGroup group) : group_(std::move(group)) {}

  const FiniteAbelianGroup& group() const { return group_; }

  /// Sets f(x) = v; v == 0 erases. Throws ValidationError for v < 0.
  void set(std::size_t index, const Rational& v);
  void set(const GroupElement& x, const Rational& v) { set(group_.index_of(x), v); }
  void add(std::size_t index, const Rational& v);

  Rational at(std::size_t index) const;
  Rational at(const GroupElement& x) const { return at(group_.index_of(x)); }

  std::size_t support_size() const { return values_.size(); }
  std::vector<std::size_t> support() const;
  Rational mass() const;

  /// Stored values keyed by element index, ascending.
  const std::map<std::size_t, Rational>& values() const { return values_; }

  bool operator==(const GroupFunction& other) const {
    return group_ == other.group_ && values_ == other.values_;
  }

 private:
  FiniteAbelianGroup group_;
  std::map<std::size_t, Rational> values_;
};

/// The periodization of f over H is the constant `level`.
struct TilingCertificate {
  Subgroup subgroup;
  Rational level;
  bool normalized;  // level == |H|
};

/// Two points whose periodized sums differ.
struct TilingFailure {
  GroupElement x;
  Rational sum_at_x;
  GroupElement x_prime;
  Rational sum_at_x_prime;
};

using TilingCheck = std::variant<TilingCertificate, TilingFailure>;

/// Computes x -> sum_{g in H} f(x - g) on all of G. Witnesses on failure are
/// the identity and the first element whose sum differs from it.
TilingCheck tiling_level(const GroupFunction& f, const Subgroup& h);

/// True when f tiles with h at level |h|.
bool tiles_normalized(const GroupFunction& f, const Subgroup& h);

struct ProjectedTile {
  QuotientGroup gamma;
  Subgroup gamma1;
  Subgroup gamma2;
  GroupFunction tile;
};

/// Pushes a common tile of G1, G2 down to G/(G1 n G2) by averaging over
/// cosets of the intersection. Throws ValidationError unless f tiles with both
/// at normalized levels.
ProjectedTile project_tile(const GroupFunction& f, const Subgroup& g1, const Subgroup& g2);

/// Places |kernel| * F(gamma) at the representative of each coset gamma.
/// Throws ValidationError unless F lives on G/kernel.
GroupFunction lift_tile(const GroupFunction& tile, const FiniteAbelianGroup& group, const Subgroup& kernel);

/// For G = G1 (+) G2 with |G1| dividing |G2|: |G1| times the indicator of the
/// sums pairing the j-th element of G2 with the (j mod |G1|)-th element of G1.
GroupFunction multiple_construction(const Subgroup& g1, const Subgroup& g2);

struct MinSupport {
  std::size_t S;
  GroupFunction witness;
};

/// S^G_{G1,G2} via quotienting by G1 n G2, splitting over cosets of
/// Gamma1 + Gamma2 and solving S(|Gamma1|, |Gamma2|) exactly inside.
MinSupport min_support(const FiniteAbelianGroup& group, const Subgroup& g1, const Subgroup& g2,
                       const copula::SearchOptions& search = {});

struct BruteForceOptions {
  std::size_t max_group_order = 36;
  unsigned threads = 1;
};

/// S^G_{G1,G2} by scanning support sets in increasing size and lexicographic
/// order, deciding each with an exact rational LP. The witness support is the
/// lexicographically smallest optimal one.
MinSupport min_support_bruteforce(const FiniteAbelianGroup& group, const Subgroup& g1, const Subgroup& g2,
                                  const BruteForceOptions& options = {});

/// A set meeting every G1-coset and every G2-coset exactly once. Requires
/// [G:G1] == [G:G2].
std::vector<GroupElement> common_fundamental_domain(const FiniteAbelianGroup& group, const Subgroup& g1,
                                                    const Subgroup& g2);

/// Transfers a matrix in A(m, n) with gcd(m, n) == 1 to Z_{mn} through the
/// CRT isomorphism: f(x) = A(x mod m, x mod n).
GroupFunction cyclic_tile_from_matrix(const copula::CopulaMatrix& matrix);

}  // namespace steintile::tiling
