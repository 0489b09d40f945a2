#include "steintile/copula.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "steintile/error.hpp"

namespace steintile::copula {

// ---------------------------------------------------------------------------
// CopulaMatrix

CopulaMatrix CopulaMatrix::validate(const std::vector<std::vector<Rational>>& rows, int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("copula dimensions must be positive");
  if (rows.size() != static_cast<std::size_t>(m)) {
    throw ValidationError("expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
  }
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(m * n));
  std::vector<Rational> col_sums(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < m; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n));
    }
    Rational row_sum = 0;
    for (int j = 0; j < n; ++j) {
      const Rational& v = row[static_cast<std::size_t>(j)];
      if (v < 0) {
        throw ValidationError("negative entry " + to_string(v) + " at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
      row_sum += v;
      col_sums[static_cast<std::size_t>(j)] += v;
      entries.push_back(v);
    }
    if (row_sum != n) {
      throw ValidationError("row " + std::to_string(i) + " sums to " + to_string(row_sum) + ", expected " +
                            std::to_string(n));
    }
  }
  for (int j = 0; j < n; ++j) {
    if (col_sums[static_cast<std::size_t>(j)] != m) {
      throw ValidationError("column " + std::to_string(j) + " sums to " +
                            to_string(col_sums[static_cast<std::size_t>(j)]) + ", expected " + std::to_string(m));
    }
  }
  return CopulaMatrix(m, n, std::move(entries));
}

CopulaMatrix validate(const std::vector<std::vector<Rational>>& rows, int m, int n) {
  return CopulaMatrix::validate(rows, m, n);
}

std::vector<std::vector<Rational>> CopulaMatrix::rows() const {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    out[static_cast<std::size_t>(i)].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
  }
  return out;
}

std::size_t CopulaMatrix::support_size() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const Rational& v) { return v != 0; }));
}

// ---------------------------------------------------------------------------
// SupportPattern

SupportPattern::SupportPattern(int m, int n) : m_(m), n_(n), rows_(static_cast<std::size_t>(std::max(m, 0)), 0U) {
  if (m < 1 || n < 1 || m > kMaxSide || n > kMaxSide) {
    throw ValidationError("pattern dimensions must lie in [1, " + std::to_string(kMaxSide) + "]");
  }
}

SupportPattern::SupportPattern(int m, int n, const std::vector<std::pair<int, int>>& edges) : SupportPattern(m, n) {
  for (auto [r, c] : edges) insert(r, c);
}

SupportPattern SupportPattern::from_row_masks(int m, int n, std::vector<std::uint32_t> masks) {
  SupportPattern p(m, n);
  if (masks.size() != static_cast<std::size_t>(m)) throw ValidationError("row mask count mismatch");
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1U);
  for (auto mask : masks) {
    if (mask & ~full) throw ValidationError("row mask has bits beyond the column count");
  }
  p.rows_ = std::move(masks);
  return p;
}

SupportPattern SupportPattern::of(const CopulaMatrix& matrix) {
  SupportPattern p(matrix.m(), matrix.n());
  for (int i = 0; i < matrix.m(); ++i) {
    for (int j = 0; j < matrix.n(); ++j) {
      if (matrix.at(i, j) != 0) p.insert(i, j);
    }
  }
  return p;
}

void SupportPattern::insert(int row, int col) {
  if (row < 0 || row >= m_ || col < 0 || col >= n_) {
    throw ValidationError("pattern edge (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
  }
  rows_[static_cast<std::size_t>(row)] |= 1U << col;
}

std::size_t SupportPattern::edge_count() const {
  std::size_t total = 0;
  for (auto mask : rows_) total += static_cast<std::size_t>(std::popcount(mask));
  return total;
}

int SupportPattern::row_degree(int row) const { return std::popcount(rows_[static_cast<std::size_t>(row)]); }

int SupportPattern::column_degree(int col) const {
  int d = 0;
  for (auto mask : rows_) d += static_cast<int>((mask >> col) & 1U);
  return d;
}

std::vector<std::pair<int, int>> SupportPattern::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

// Incidence vector as an integer whose most significant of `width` bits is
// position 0, so integer order is lexicographic order of the vector.
std::uint64_t lex_value(std::uint32_t mask, int width) {
  std::uint64_t v = 0;
  for (int j = 0; j < width; ++j) v = (v << 1) | ((mask >> j) & 1U);
  return v;
}

std::uint32_t column_mask(const std::vector<std::uint32_t>& rows, int col) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) mask |= ((rows[i] >> col) & 1U) << i;
  return mask;
}

struct Key {
  int degree;
  std::uint64_t vector;
  auto operator<=>(const Key&) const = default;
};

Key row_key(std::uint32_t mask, int n) { return {std::popcount(mask), lex_value(mask, n)}; }

bool rows_sorted(const std::vector<std::uint32_t>& rows, int n) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (row_key(rows[i], n) < row_key(rows[i - 1], n)) return false;
  }
  return true;
}

bool columns_sorted(const std::vector<std::uint32_t>& rows, int m, int n) {
  Key prev{-1, 0};
  for (int j = 0; j < n; ++j) {
    const Key k = row_key(column_mask(rows, j), m);
    if (k < prev) return false;
    prev = k;
  }
  return true;
}

}  // namespace

SupportPattern SupportPattern::canonical() const {
  // Each sort does not increase the column-major reading of the pattern and
  // strictly decreases it when it changes anything, so the loop terminates.
  std::vector<std::uint32_t> rows = rows_;
  for (;;) {
    bool changed = false;
    if (!rows_sorted(rows, n_)) {
      std::stable_sort(rows.begin(), rows.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return row_key(a, n_) < row_key(b, n_); });
      changed = true;
    }
    if (!columns_sorted(rows, m_, n_)) {
      std::vector<int> order(static_cast<std::size_t>(n_));
      std::iota(order.begin(), order.end(), 0);
      std::vector<Key> keys;
      keys.reserve(order.size());
      for (int j = 0; j < n_; ++j) keys.push_back(row_key(column_mask(rows, j), m_));
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
      });
      std::vector<std::uint32_t> permuted(rows.size(), 0U);
      for (int j = 0; j < n_; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < rows.size(); ++i) permuted[i] |= ((rows[i] >> src) & 1U) << j;
      }
      rows = std::move(permuted);
      changed = true;
    }
    if (!changed) break;
  }
  return from_row_masks(m_, n_, std::move(rows));
}

bool SupportPattern::is_canonical() const { return rows_sorted(rows_, n_) && columns_sorted(rows_, m_, n_); }

SupportPattern SupportPattern::transposed() const {
  SupportPattern t(n_, m_);
  for (int j = 0; j < n_; ++j) t.rows_[static_cast<std::size_t>(j)] = column_mask(rows_, j);
  return t;
}

// ---------------------------------------------------------------------------
// Constructions

CopulaMatrix construct_lmr(int m, int k) {
  if (m < 2) throw ValidationError("construct_lmr needs m >= 2");
  if (k < 1) throw ValidationError("construct_lmr needs k >= 1");
  const int n = k * m + 1;
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < m; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    row[0] = 1;
    for (int t = 1; t <= k; ++t) row[static_cast<std::size_t>(t + i * k)] = m;
  }
  return CopulaMatrix::validate(rows, m, n);
}

CopulaMatrix construct_nw_blocks(int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("construct_nw_blocks needs m, n >= 1");
  const int g = std::gcd(m, n);
  const int bm = m / g;
  const int bn = n / g;
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int b = 0; b < g; ++b) {
    std::int64_t row_left = n;
    std::int64_t col_left = m;
    int i = 0;
    int j = 0;
    while (i < bm && j < bn) {
      const std::int64_t v = std::min(row_left, col_left);
      rows[static_cast<std::size_t>(b * bm + i)][static_cast<std::size_t>(b * bn + j)] = v;
      row_left -= v;
      col_left -= v;
      if (row_left == 0) {
        ++i;
        row_left = n;
      }
      if (col_left == 0) {
        ++j;
        col_left = m;
      }
    }
  }
  return CopulaMatrix::validate(rows, m, n);
}

// ---------------------------------------------------------------------------
// Transportation feasibility

namespace {

// Small dense max-flow on source -> rows -> columns -> sink.
class BipartiteFlow {
 public:
  BipartiteFlow(int m, int n) : m_(m), n_(n), nodes_(m + n + 2), cap_(static_cast<std::size_t>(nodes_ * nodes_), 0) {}

  void set_supply(int row, std::int64_t c) { cap(source(), row_node(row)) = c; }
  void set_demand(int col, std::int64_t c) { cap(col_node(col), sink()) = c; }
  void open_edge(int row, int col) { cap(row_node(row), col_node(col)) = kInfinite; }

  std::int64_t run() {
    std::int64_t total = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes_));
    for (;;) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<std::size_t>(source())] = source();
      std::queue<int> frontier;
      frontier.push(source());
      while (!frontier.empty() && parent[static_cast<std::size_t>(sink())] < 0) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < nodes_; ++v) {
          if (parent[static_cast<std::size_t>(v)] < 0 && cap(u, v) > 0) {
            parent[static_cast<std::size_t>(v)] = u;
            frontier.push(v);
          }
        }
      }
      if (parent[static_cast<std::size_t>(sink())] < 0) break;
      std::int64_t push = kInfinite;
      for (int v = sink(); v != source(); v = parent[static_cast<std::size_t>(v)]) {
        push = std::min(push, cap(parent[static_cast<std::size_t>(v)], v));
      }
      for (int v = sink(); v != source(); v = parent[static_cast<std::size_t>(v)]) {
        const int u = parent[static_cast<std::size_t>(v)];
        cap(u, v) -= push;
        cap(v, u) += push;
      }
      total += push;
    }
    return total;
  }

 private:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  int source() const { return 0; }
  int sink() const { return nodes_ - 1; }
  int row_node(int i) const { return 1 + i; }
  int col_node(int j) const { return 1 + m_ + j; }
  std::int64_t& cap(int u, int v) { return cap_[static_cast<std::size_t>(u * nodes_ + v)]; }

  int m_;
  int n_;
  int nodes_;
  std::vector<std::int64_t> cap_;
};

// Feasibility of the residual problem using only edges at row-major
// positions >= `from`, with the given remaining margins.
bool residual_feasible(const SupportPattern& pattern, const std::vector<std::int64_t>& row_left,
                       const std::vector<std::int64_t>& col_left, int from) {
  const int m = pattern.m();
  const int n = pattern.n();
  BipartiteFlow flow(m, n);
  std::int64_t need = 0;
  for (int i = 0; i < m; ++i) {
    flow.set_supply(i, row_left[static_cast<std::size_t>(i)]);
    need += row_left[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < n; ++j) flow.set_demand(j, col_left[static_cast<std::size_t>(j)]);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i * n + j >= from && pattern.contains(i, j)) flow.open_edge(i, j);
    }
  }
  return flow.run() == need;
}

bool pattern_feasible(const SupportPattern& pattern) {
  std::vector<std::int64_t> rows(static_cast<std::size_t>(pattern.m()), pattern.n());
  std::vector<std::int64_t> cols(static_cast<std::size_t>(pattern.n()), pattern.m());
  return residual_feasible(pattern, rows, cols, 0);
}

}  // namespace

TransportResult transportation_feasible(const SupportPattern& pattern) {
  if (!pattern_feasible(pattern)) return {};
  const int m = pattern.m();
  const int n = pattern.n();
  std::vector<std::int64_t> row_left(static_cast<std::size_t>(m), n);
  std::vector<std::int64_t> col_left(static_cast<std::size_t>(n), m);
  std::vector<std::vector<Rational>> plan(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!pattern.contains(i, j)) continue;
      auto& r = row_left[static_cast<std::size_t>(i)];
      auto& c = col_left[static_cast<std::size_t>(j)];
      // Largest value at (i, j) that still admits a completion; v = 0 always
      // does, since the current state is feasible.
      for (std::int64_t v = std::min(r, c); v > 0; --v) {
        r -= v;
        c -= v;
        if (residual_feasible(pattern, row_left, col_left, i * n + j + 1)) {
          plan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
          break;
        }
        r += v;
        c += v;
      }
    }
  }
  return {true, CopulaMatrix::validate(plan, m, n)};
}

std::int64_t support_lower_bound(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw ValidationError("support_lower_bound needs m, n >= 1");
  const std::int64_t row_needs = (n + m - 1) / m;
  const std::int64_t col_needs = (m + n - 1) / n;
  return std::max(m * row_needs, n * col_needs);
}

// ---------------------------------------------------------------------------
// Exact search

namespace {

class PatternSearch {
 public:
  PatternSearch(int m, int n) : m_(m), n_(n) {
    min_row_degree_ = (n + m - 1) / m;
    min_col_degree_ = (m + n - 1) / n;
    by_degree_.assign(static_cast<std::size_t>(n + 1), {});
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      by_degree_[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    for (auto& list : by_degree_) {
      std::sort(list.begin(), list.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_value(a, n_) < lex_value(b, n_); });
    }
  }

  /// First canonical feasible pattern with exactly `edges` edges, if any.
  std::optional<SupportPattern> run(int edges) {
    edges_ = edges;
    rows_.assign(static_cast<std::size_t>(m_), 0U);
    col_degree_.assign(static_cast<std::size_t>(n_), 0);
    unions_.assign(static_cast<std::size_t>(m_ + 1), {});
    unions_[0] = {0U};
    found_.reset();
    descend(0, min_row_degree_, 0, 0);
    return found_;
  }

  std::uint64_t tested() const { return tested_; }

 private:
  // Row subsets are checked against Hall's condition n|R| <= m|N(R)| while
  // there are at most this many rows placed.
  static constexpr int kHallDepth = 10;

  bool descend(int row, int min_degree, std::size_t start, int used) {
    if (row == m_) return finish(used);
    const int rows_after = m_ - row - 1;
    for (int d = min_degree; d <= n_; ++d) {
      if (used + d * (rows_after + 1) > edges_) break;
      const auto& list = by_degree_[static_cast<std::size_t>(d)];
      for (std::size_t p = (d == min_degree ? start : 0); p < list.size(); ++p) {
        const std::uint32_t mask = list[p];
        if (rows_after == 0 && used + d != edges_) break;
        if (!place(row, mask, used + d)) continue;
        const bool done = descend(row + 1, d, p, used + d);
        unplace(row, mask);
        if (done) return true;
      }
    }
    return false;
  }

  bool place(int row, std::uint32_t mask, int used) {
    int deficit = 0;
    for (int j = 0; j < n_; ++j) {
      const int deg = col_degree_[static_cast<std::size_t>(j)] + static_cast<int>((mask >> j) & 1U);
      deficit += std::max(0, min_col_degree_ - deg);
    }
    if (deficit > edges_ - used) return false;
    if (row < kHallDepth) {
      const auto& prev = unions_[static_cast<std::size_t>(row)];
      auto& next = unions_[static_cast<std::size_t>(row + 1)];
      next = prev;
      next.reserve(prev.size() * 2);
      for (std::size_t s = 0; s < prev.size(); ++s) {
        const std::uint32_t u = prev[s] | mask;
        const int subset_rows = std::popcount(static_cast<std::uint32_t>(s)) + 1;
        if (static_cast<std::int64_t>(n_) * subset_rows > static_cast<std::int64_t>(m_) * std::popcount(u)) return false;
        next.push_back(u);
      }
    }
    rows_[static_cast<std::size_t>(row)] = mask;
    for (int j = 0; j < n_; ++j) col_degree_[static_cast<std::size_t>(j)] += static_cast<int>((mask >> j) & 1U);
    return true;
  }

  void unplace(int row, std::uint32_t mask) {
    rows_[static_cast<std::size_t>(row)] = 0U;
    for (int j = 0; j < n_; ++j) col_degree_[static_cast<std::size_t>(j)] -= static_cast<int>((mask >> j) & 1U);
  }

  bool finish(int used) {
    if (used != edges_) return false;
    for (auto d : col_degree_) {
      if (d < min_col_degree_) return false;
    }
    if (!columns_sorted(rows_, m_, n_)) return false;
    ++tested_;
    SupportPattern pattern = SupportPattern::from_row_masks(m_, n_, rows_);
    if (!pattern_feasible(pattern)) return false;
    found_ = std::move(pattern);
    return true;
  }

  int m_;
  int n_;
  int min_row_degree_;
  int min_col_degree_;
  int edges_ = 0;
  std::vector<std::vector<std::uint32_t>> by_degree_;
  std::vector<std::uint32_t> rows_;
  std::vector<int> col_degree_;
  // unions_[r][s]: union of the column masks of the rows in subset s of the
  // first r rows.
  std::vector<std::vector<std::uint32_t>> unions_;
  std::optional<SupportPattern> found_;
  std::uint64_t tested_ = 0;
};

}  // namespace

MinSupportResult min_support_exact(int m, int n, const SearchOptions& options) {
  if (m < 1 || n < 1) throw ValidationError("min_support_exact needs m, n >= 1");
  if (std::min(m, n) > options.max_short_side || std::max(m, n) > options.max_long_side) {
    throw CapExceeded("S(" + std::to_string(m) + "," + std::to_string(n) + ") is outside the search cap (min side <= " +
                      std::to_string(options.max_short_side) + ", max side <= " + std::to_string(options.max_long_side) +
                      ")");
  }
  MinSupportResult result;
  result.lower_bound = support_lower_bound(m, n);
  result.nw_blocks_support = m + n - std::gcd(m, n);

  PatternSearch search(m, n);
  for (std::int64_t s = result.lower_bound; s <= static_cast<std::int64_t>(m) * n; ++s) {
    auto pattern = search.run(static_cast<int>(s));
    if (!pattern) continue;
    auto transport = transportation_feasible(*pattern);
    result.S = static_cast<std::size_t>(s);
    result.pattern = std::move(*pattern);
    result.witness = std::move(*transport.witness);
    result.patterns_tested = search.tested();
    if (result.witness.support_size() != result.S) {
      throw Error("minimal pattern admits a plan with smaller support");
    }
    return result;
  }
  // The full m x n pattern is always feasible, so this is unreachable.
  throw Error("no feasible support pattern found");
}

}  // namespace steintile::copula
