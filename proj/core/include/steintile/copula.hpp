#pragma once

// Nonnegative m x n matrices with every row sum n and every column sum m
// (the set A(m, n)), their support patterns, and the exact minimal support
// size S(m, n).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "steintile/rational.hpp"

namespace steintile::copula {

class CopulaMatrix {
 public:
  /// Accepts iff the matrix is m x n, nonnegative, every row sums to n and
  /// every column sums to m. Throws ValidationError naming the first
  /// offending row, column or entry.
  static CopulaMatrix validate(const std::vector<std::vector<Rational>>& rows, int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const Rational& at(int row, int col) const { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
  std::vector<std::vector<Rational>> rows() const;
  std::size_t support_size() const;

  bool operator==(const CopulaMatrix&) const = default;

 private:
  CopulaMatrix(int m, int n, std::vector<Rational> entries) : m_(m), n_(n), entries_(std::move(entries)) {}

  int m_;
  int n_;
  std::vector<Rational> entries_;  // row-major
};

/// Free-function spelling of CopulaMatrix::validate.
CopulaMatrix validate(const std::vector<std::vector<Rational>>& rows, int m, int n);

/// Zero/nonzero pattern of an m x n matrix; row masks carry bit j for column j.
class SupportPattern {
 public:
  static constexpr int kMaxSide = 30;

  SupportPattern(int m, int n);
  SupportPattern(int m, int n, const std::vector<std::pair<int, int>>& edges);
  static SupportPattern from_row_masks(int m, int n, std::vector<std::uint32_t> masks);
  static SupportPattern of(const CopulaMatrix& matrix);

  int m() const { return m_; }
  int n() const { return n_; }
  bool contains(int row, int col) const { return (rows_[static_cast<std::size_t>(row)] >> col) & 1U; }
  void insert(int row, int col);

  std::size_t edge_count() const;
  int row_degree(int row) const;
  int column_degree(int col) const;
  const std::vector<std::uint32_t>& row_masks() const { return rows_; }

  /// Edges in row-major order.
  std::vector<std::pair<int, int>> edges() const;

  /// Representative under row and column permutations: rows ascending by
  /// (degree, incidence vector read from column 0), then columns ascending by
  /// (degree, incidence vector read from row 0), repeated to a fixpoint.
  SupportPattern canonical() const;
  bool is_canonical() const;

  SupportPattern transposed() const;

  bool operator==(const SupportPattern&) const = default;

 private:
  int m_;
  int n_;
  std::vector<std::uint32_t> rows_;
};

/// The m x (km+1) matrix with a first column of 1s and, in row i, k entries
/// equal to m in columns 1+ik .. k+ik. Support (k+1)m.
CopulaMatrix construct_lmr(int m, int k);

/// gcd(m,n) diagonal blocks of shape (m/g) x (n/g), each filled by the
/// northwest-corner rule. Support m + n - gcd(m, n).
CopulaMatrix construct_nw_blocks(int m, int n);

struct TransportResult {
  bool feasible = false;
  /// The integral plan that is lexicographically largest in row-major order.
  std::optional<CopulaMatrix> witness;
};

/// Whether some nonnegative matrix supported inside `pattern` has all row sums
/// n and column sums m, decided by integral max-flow.
TransportResult transportation_feasible(const SupportPattern& pattern);

/// max(m * ceil(n/m), n * ceil(m/n)).
std::int64_t support_lower_bound(std::int64_t m, std::int64_t n);

struct SearchOptions {
  /// Caps on min(m, n) and max(m, n).
  int max_short_side = 8;
  int max_long_side = 16;
};

struct MinSupportResult {
  std::size_t S = 0;
  SupportPattern pattern{1, 1};
  CopulaMatrix witness = construct_nw_blocks(1, 1);
  std::int64_t lower_bound = 0;
  std::int64_t nw_blocks_support = 0;
  /// Complete candidate patterns handed to the flow test.
  std::uint64_t patterns_tested = 0;
};

/// Exact S(m, n): for s = support_lower_bound(m, n), s+1, ... enumerates
/// canonical patterns with s edges (row degree >= ceil(n/m), column degree
/// >= ceil(m/n)) and stops at the first transportation-feasible one.
/// Throws CapExceeded outside the search caps.
MinSupportResult min_support_exact(int m, int n, const SearchOptions& options = {});

}  // namespace steintile::copula
