#include "steintile/abelian.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>
#include <tuple>

#include "steintile/error.hpp"

namespace steintile::abelian {

std::string to_string(const GroupElement& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.coordinates.size(); ++i) {
    if (i) out << ',';
    out << x.coordinates[i];
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup FiniteAbelianGroup::product(std::vector<std::int64_t> orders, std::uint64_t cap) {
  if (orders.empty()) throw ValidationError("group needs at least one cyclic factor");
  std::uint64_t total = 1;
  for (auto d : orders) {
    if (d < 1) throw ValidationError("cyclic factor order must be >= 1, got " + std::to_string(d));
    if (total > cap / static_cast<std::uint64_t>(d)) {
      throw CapExceeded("group order exceeds the enumeration cap of " + std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(d);
  }
  if (total > cap) throw CapExceeded("group order exceeds the enumeration cap of " + std::to_string(cap));
  auto impl = std::make_shared<Impl>();
  impl->orders = std::move(orders);
  impl->order = static_cast<std::size_t>(total);
  return FiniteAbelianGroup(std::move(impl));
}

FiniteAbelianGroup FiniteAbelianGroup::parent() const {
  if (!impl_->parent) throw ValidationError("group is not a quotient");
  return FiniteAbelianGroup(impl_->parent);
}

std::size_t FiniteAbelianGroup::add_in(const Impl& impl, std::size_t a, std::size_t b) {
  if (impl.parent) {
    return impl.reduce[add_in(*impl.parent, impl.representatives[a], impl.representatives[b])];
  }
  std::size_t result = 0;
  std::size_t radix = 1;
  for (std::size_t k = impl.orders.size(); k-- > 0;) {
    const auto d = static_cast<std::size_t>(impl.orders[k]);
    const std::size_t ca = (a / radix) % d;
    const std::size_t cb = (b / radix) % d;
    result += ((ca + cb) % d) * radix;
    radix *= d;
  }
  return result;
}

std::size_t FiniteAbelianGroup::negate_in(const Impl& impl, std::size_t a) {
  if (impl.parent) return impl.reduce[negate_in(*impl.parent, impl.representatives[a])];
  std::size_t result = 0;
  std::size_t radix = 1;
  for (std::size_t k = impl.orders.size(); k-- > 0;) {
    const auto d = static_cast<std::size_t>(impl.orders[k]);
    const std::size_t c = (a / radix) % d;
    result += ((d - c) % d) * radix;
    radix *= d;
  }
  return result;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const { return add_in(*impl_, a, b); }

std::size_t FiniteAbelianGroup::negate(std::size_t a) const { return negate_in(*impl_, a); }

GroupElement FiniteAbelianGroup::element(std::size_t index) const {
  if (index >= order()) throw ValidationError("element index out of range");
  std::size_t raw = impl_->parent ? impl_->representatives[index] : index;
  std::vector<std::int64_t> coords(impl_->orders.size());
  for (std::size_t k = coords.size(); k-- > 0;) {
    const auto d = static_cast<std::size_t>(impl_->orders[k]);
    coords[k] = static_cast<std::int64_t>(raw % d);
    raw /= d;
  }
  return GroupElement(std::move(coords));
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  const auto& orders = impl_->orders;
  if (x.coordinates.size() != orders.size()) {
    throw ValidationError("element " + to_string(x) + " has the wrong number of coordinates for " + describe());
  }
  std::size_t raw = 0;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const auto c = x.coordinates[k];
    if (c < 0 || c >= orders[k]) {
      throw ValidationError("element " + to_string(x) + " is out of range for " + describe());
    }
    raw = raw * static_cast<std::size_t>(orders[k]) + static_cast<std::size_t>(c);
  }
  return impl_->parent ? impl_->reduce[raw] : raw;
}

bool FiniteAbelianGroup::same_group(const Impl& a, const Impl& b) {
  if (&a == &b) return true;
  if (a.orders != b.orders || a.order != b.order) return false;
  if (static_cast<bool>(a.parent) != static_cast<bool>(b.parent)) return false;
  if (!a.parent) return true;
  return same_group(*a.parent, *b.parent) && a.kernel == b.kernel;
}

bool FiniteAbelianGroup::operator==(const FiniteAbelianGroup& other) const {
  return same_group(*impl_, *other.impl_);
}

std::string FiniteAbelianGroup::describe() const {
  std::ostringstream out;
  if (impl_->parent) {
    out << "quotient of order " << order() << " of ";
    out << FiniteAbelianGroup(impl_->parent).describe();
    return out.str();
  }
  for (std::size_t k = 0; k < impl_->orders.size(); ++k) {
    if (k) out << " x ";
    out << "Z_" << impl_->orders[k];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<std::size_t> sorted_elements,
                   std::vector<std::size_t> generators)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)), generators_(std::move(generators)) {}

bool Subgroup::contains(std::size_t index) const {
  return std::binary_search(elements_.begin(), elements_.end(), index);
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(elements_.size());
  for (auto i : elements_) out.push_back(parent_.element(i));
  return out;
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  out.reserve(generators_.size());
  for (auto i : generators_) out.push_back(parent_.element(i));
  return out;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_ == other.parent_ && elements_ == other.elements_;
}

namespace {

// Extends the subgroup held in `members` to members + <g>. Processing the
// appended elements too makes the result closed under adding g.
void close_under(const FiniteAbelianGroup& group, std::size_t g, std::vector<bool>& member,
                 std::vector<std::size_t>& members) {
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::size_t x = group.add(members[k], g);
    if (!member[x]) {
      member[x] = true;
      members.push_back(x);
    }
  }
}

}  // namespace

Subgroup trivial_subgroup(const FiniteAbelianGroup& group) {
  return Subgroup(group, {group.identity()}, {});
}

Subgroup whole_group(const FiniteAbelianGroup& group) {
  std::vector<std::size_t> gens;
  std::vector<bool> member(group.order(), false);
  std::vector<std::size_t> members{group.identity()};
  member[group.identity()] = true;
  for (std::size_t g = 1; g < group.order(); ++g) {
    if (member[g]) continue;
    gens.push_back(g);
    close_under(group, g, member, members);
  }
  std::sort(members.begin(), members.end());
  return Subgroup(group, std::move(members), std::move(gens));
}

Subgroup subgroup_from_indices(const FiniteAbelianGroup& group, std::span<const std::size_t> gens) {
  std::vector<bool> member(group.order(), false);
  std::vector<std::size_t> members{group.identity()};
  member[group.identity()] = true;
  std::vector<std::size_t> used;
  for (auto g : gens) {
    if (g >= group.order()) throw ValidationError("generator index out of range");
    used.push_back(g);
    if (!member[g]) close_under(group, g, member, members);
  }
  std::sort(members.begin(), members.end());
  return Subgroup(group, std::move(members), std::move(used));
}

Subgroup subgroup_from_generators(const FiniteAbelianGroup& group, std::span<const GroupElement> gens) {
  std::vector<std::size_t> indices;
  indices.reserve(gens.size());
  for (const auto& g : gens) indices.push_back(group.index_of(g));
  return subgroup_from_indices(group, indices);
}

SubgroupCalculus subgroup_calculus(const Subgroup& h1, const Subgroup& h2) {
  if (!(h1.parent() == h2.parent())) throw ValidationError("subgroups belong to different groups");
  const auto& group = h1.parent();
  std::vector<std::size_t> common;
  std::set_intersection(h1.element_indices().begin(), h1.element_indices().end(),
                        h2.element_indices().begin(), h2.element_indices().end(), std::back_inserter(common));
  Subgroup intersection(group, common, {});
  std::vector<std::size_t> gens = h1.generator_indices();
  gens.insert(gens.end(), h2.generator_indices().begin(), h2.generator_indices().end());
  if (gens.empty()) gens.push_back(group.identity());
  Subgroup sum = subgroup_from_indices(group, gens);
  return SubgroupCalculus{std::move(intersection), std::move(sum), h1.index(), h2.index()};
}

std::vector<std::vector<std::size_t>> cosets(const Subgroup& h) {
  const auto& group = h.parent();
  std::vector<bool> seen(group.order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> coset;
    coset.reserve(h.order());
    for (auto g : h.element_indices()) {
      const std::size_t y = group.add(x, g);
      seen[y] = true;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuotientGroup

QuotientGroup::QuotientGroup(const FiniteAbelianGroup& parent, const Subgroup& kernel)
    : parent_(parent), kernel_(kernel), group_(parent) {
  if (!(kernel.parent() == parent)) throw ValidationError("kernel is not a subgroup of the given group");
  auto impl = std::make_shared<FiniteAbelianGroup::Impl>();
  impl->orders = parent.orders();
  impl->parent = parent.impl_;
  impl->kernel = kernel.element_indices();
  impl->reduce.assign(parent.order(), 0);
  std::vector<bool> seen(parent.order(), false);
  for (std::size_t x = 0; x < parent.order(); ++x) {
    if (seen[x]) continue;
    // x is the smallest element of its coset.
    const std::size_t gamma = impl->representatives.size();
    impl->representatives.push_back(x);
    for (auto k : kernel.element_indices()) {
      const std::size_t y = parent.add(x, k);
      seen[y] = true;
      impl->reduce[y] = gamma;
    }
  }
  impl->order = impl->representatives.size();
  group_ = FiniteAbelianGroup(std::move(impl));
}

std::vector<GroupElement> QuotientGroup::representatives() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::size_t gamma = 0; gamma < order(); ++gamma) out.push_back(group_.element(gamma));
  return out;
}

std::size_t QuotientGroup::representative_index(std::size_t gamma) const {
  if (gamma >= order()) throw ValidationError("quotient element out of range");
  return group_.impl_->representatives[gamma];
}

std::size_t QuotientGroup::project_index(std::size_t parent_index) const {
  if (parent_index >= parent_.order()) throw ValidationError("element index out of range");
  return group_.impl_->reduce[parent_index];
}

GroupElement QuotientGroup::reduce(const GroupElement& x) const {
  return parent_.element(representative_index(project_index(parent_.index_of(x))));
}

Subgroup QuotientGroup::project(const Subgroup& h) const {
  if (!(h.parent() == parent_)) throw ValidationError("subgroup is not in the quotient's parent group");
  std::vector<std::size_t> image;
  image.reserve(h.order());
  for (auto x : h.element_indices()) image.push_back(project_index(x));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<std::size_t> gens;
  for (auto g : h.generator_indices()) gens.push_back(project_index(g));
  return Subgroup(group_, std::move(image), std::move(gens));
}

QuotientGroup quotient(const FiniteAbelianGroup& group, const Subgroup& kernel) {
  return QuotientGroup(group, kernel);
}

// ---------------------------------------------------------------------------
// CRT

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t mod) {
  // Extended Euclid; assumes gcd(a, mod) == 1.
  std::int64_t old_r = a % mod, r = mod;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  std::int64_t inv = old_s % mod;
  if (inv < 0) inv += mod;
  return inv;
}

}  // namespace

CrtIsomorphism::CrtIsomorphism(std::int64_t m, std::int64_t n) : m_(m), n_(n), m_inverse_mod_n_(0) {
  if (m < 1 || n < 1) throw ValidationError("CRT moduli must be positive");
  if (std::gcd(m, n) != 1) {
    throw ValidationError("CRT moduli " + std::to_string(m) + " and " + std::to_string(n) + " are not coprime");
  }
  m_inverse_mod_n_ = n == 1 ? 0 : inverse_mod(m % n, n);
}

std::int64_t CrtIsomorphism::to_cyclic(std::int64_t i, std::int64_t j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= n_) throw ValidationError("CRT residue out of range");
  // x = i + m * t with t = (j - i) * m^{-1} mod n.
  std::int64_t t = ((j - i) % n_ + n_) % n_;
  __extension__ using wide = __int128;
  t = static_cast<std::int64_t>((static_cast<wide>(t) * m_inverse_mod_n_) % n_);
  return i + m_ * t;
}

std::pair<std::int64_t, std::int64_t> CrtIsomorphism::from_cyclic(std::int64_t x) const {
  if (x < 0 || x >= m_ * n_) throw ValidationError("CRT value out of range");
  return {x % m_, x % n_};
}

CrtIsomorphism crt_iso(std::int64_t m, std::int64_t n) { return CrtIsomorphism(m, n); }

// ---------------------------------------------------------------------------

std::vector<Subgroup> cyclic_subgroups(const FiniteAbelianGroup& group) {
  std::vector<bool> done(group.order(), false);
  std::vector<Subgroup> out;
  for (std::size_t g = 1; g < group.order(); ++g) {
    if (done[g]) continue;
    const std::size_t gens[] = {g};
    Subgroup h = subgroup_from_indices(group, gens);
    // Every element of <g> with the same order generates the same subgroup.
    const std::size_t order = h.order();
    for (auto x : h.element_indices()) {
      std::size_t k = 1;
      for (std::size_t y = x; y != group.identity(); y = group.add(y, x)) ++k;
      if (k == order) done[x] = true;
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace steintile::abelian
