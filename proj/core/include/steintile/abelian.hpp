#pragma once

// Finite abelian groups modeled by explicit element enumeration.
//
// A product group Z_{d1} x ... x Z_{dk} numbers its elements in mixed radix
// with the first coordinate most significant, so element indices increase in
// lexicographic order of coordinate tuples. A quotient G/H is itself exposed
// as a FiniteAbelianGroup whose elements are the lexicographically smallest
// coset representatives, numbered in increasing order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace steintile::abelian {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct GroupElement {
  std::vector<std::int64_t> coordinates;

  GroupElement() = default;
  GroupElement(std::initializer_list<std::int64_t> coords) : coordinates(coords) {}
  explicit GroupElement(std::vector<std::int64_t> coords) : coordinates(std::move(coords)) {}

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

std::string to_string(const GroupElement& x);

class FiniteAbelianGroup {
 public:
  /// Z_{d1} x ... x Z_{dk}. Throws ValidationError on orders < 1 or an empty
  /// list, CapExceeded when the product exceeds `cap`.
  static FiniteAbelianGroup product(std::vector<std::int64_t> orders,
                                    std::uint64_t cap = kDefaultEnumerationCap);

  std::size_t order() const { return impl_->order; }

  /// Coordinate space of the elements. For a quotient these are the orders of
  /// the parent group, since elements are labelled by parent representatives.
  const std::vector<std::int64_t>& orders() const { return impl_->orders; }

  bool is_quotient() const { return static_cast<bool>(impl_->parent); }

  /// Parent group of a quotient; throws ValidationError for a product group.
  FiniteAbelianGroup parent() const;

  std::size_t identity() const { return 0; }
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  std::size_t subtract(std::size_t a, std::size_t b) const { return add(a, negate(b)); }

  GroupElement element(std::size_t index) const;

  /// Index of an element. For a quotient any parent element is accepted and
  /// mapped to its coset. Throws ValidationError when out of range.
  std::size_t index_of(const GroupElement& x) const;

  bool operator==(const FiniteAbelianGroup& other) const;

  std::string describe() const;

 private:
  friend class QuotientGroup;

  struct Impl {
    std::vector<std::int64_t> orders;
    std::size_t order = 1;
    // Quotient data; empty for product groups.
    std::shared_ptr<const Impl> parent;
    std::vector<std::size_t> kernel;           // sorted parent indices
    std::vector<std::size_t> representatives;  // parent index per element
    std::vector<std::size_t> reduce;           // parent index -> element index
  };

  explicit FiniteAbelianGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::size_t add_in(const Impl& impl, std::size_t a, std::size_t b);
  static std::size_t negate_in(const Impl& impl, std::size_t a);
  static bool same_group(const Impl& a, const Impl& b);

  std::shared_ptr<const Impl> impl_;
};

/// A subgroup, stored as its fully enumerated sorted element indices.
class Subgroup {
 public:
  Subgroup(FiniteAbelianGroup parent, std::vector<std::size_t> sorted_elements,
           std::vector<std::size_t> generators);

  const FiniteAbelianGroup& parent() const { return parent_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t index() const { return parent_.order() / elements_.size(); }

  const std::vector<std::size_t>& element_indices() const { return elements_; }
  const std::vector<std::size_t>& generator_indices() const { return generators_; }
  bool contains(std::size_t index) const;

  std::vector<GroupElement> elements() const;
  std::vector<GroupElement> generators() const;

  /// Same parent and same element set.
  bool operator==(const Subgroup& other) const;

 private:
  FiniteAbelianGroup parent_;
  std::vector<std::size_t> elements_;
  std::vector<std::size_t> generators_;
};

Subgroup trivial_subgroup(const FiniteAbelianGroup& group);
Subgroup whole_group(const FiniteAbelianGroup& group);

Subgroup subgroup_from_generators(const FiniteAbelianGroup& group, std::span<const GroupElement> gens);
Subgroup subgroup_from_indices(const FiniteAbelianGroup& group, std::span<const std::size_t> gens);

struct SubgroupCalculus {
  Subgroup intersection;
  Subgroup sum;
  std::size_t index1;
  std::size_t index2;
};

SubgroupCalculus subgroup_calculus(const Subgroup& h1, const Subgroup& h2);

/// Cosets of `h`; each coset is a sorted list of element indices, and the
/// list of cosets is ordered by smallest element.
std::vector<std::vector<std::size_t>> cosets(const Subgroup& h);

class QuotientGroup {
 public:
  QuotientGroup(const FiniteAbelianGroup& parent, const Subgroup& kernel);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const Subgroup& kernel() const { return kernel_; }

  /// The quotient as a group in its own right.
  const FiniteAbelianGroup& group() const { return group_; }

  std::size_t order() const { return group_.order(); }

  std::vector<GroupElement> representatives() const;

  /// Representative (parent index) of quotient element `gamma`.
  std::size_t representative_index(std::size_t gamma) const;

  /// Quotient element index of parent element `parent_index`.
  std::size_t project_index(std::size_t parent_index) const;

  /// Maps a parent element to the representative of its coset.
  GroupElement reduce(const GroupElement& x) const;

  /// Image of a parent subgroup in the quotient.
  Subgroup project(const Subgroup& h) const;

 private:
  FiniteAbelianGroup parent_;
  Subgroup kernel_;
  FiniteAbelianGroup group_;
};

QuotientGroup quotient(const FiniteAbelianGroup& group, const Subgroup& kernel);

/// Z_m x Z_n <-> Z_{mn} for coprime m, n.
class CrtIsomorphism {
 public:
  /// Throws ValidationError unless m, n >= 1 and gcd(m, n) == 1.
  CrtIsomorphism(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }

  /// The unique x in [0, mn) with x = i (mod m) and x = j (mod n).
  std::int64_t to_cyclic(std::int64_t i, std::int64_t j) const;
  std::pair<std::int64_t, std::int64_t> from_cyclic(std::int64_t x) const;

 private:
  std::int64_t m_;
  std::int64_t n_;
  std::int64_t m_inverse_mod_n_;
};

CrtIsomorphism crt_iso(std::int64_t m, std::int64_t n);

/// Distinct nontrivial cyclic subgroups, each generated by its smallest
/// generating element, listed in increasing order of that generator.
std::vector<Subgroup> cyclic_subgroups(const FiniteAbelianGroup& group);

}  // namespace steintile::abelian
