#include "steintile/exact_lp.hpp"

#include "steintile/error.hpp"

namespace steintile::lp {

std::optional<std::vector<Rational>> find_nonnegative_solution(const EqualitySystem& system) {
  const std::size_t rows = system.rows.size();
  const std::size_t vars = system.variables;
  if (system.rhs.size() != rows) throw ValidationError("right-hand side length does not match the row count");
  for (const auto& row : system.rows) {
    if (row.size() != vars) throw ValidationError("constraint row length does not match the variable count");
  }
  if (rows == 0) return std::vector<Rational>(vars, Rational(0));

  // Columns: original variables, then one artificial per row, then the rhs.
  const std::size_t width = vars + rows + 1;
  const std::size_t rhs_col = width - 1;
  std::vector<Rational> tab(rows * width, Rational(0));
  auto cell = [&](std::size_t r, std::size_t c) -> Rational& { return tab[r * width + c]; };

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = system.rhs[r] < 0;
    for (std::size_t c = 0; c < vars; ++c) cell(r, c) = flip ? -system.rows[r][c] : system.rows[r][c];
    cell(r, vars + r) = 1;
    cell(r, rhs_col) = flip ? -system.rhs[r] : system.rhs[r];
    basis[r] = vars + r;
  }

  // Phase-one objective: minimize the sum of artificials. reduced[c] holds the
  // reduced cost of column c; reduced[rhs_col] holds minus the objective value.
  std::vector<Rational> reduced(width, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < vars; ++c) {
      if (cell(r, c) != 0) reduced[c] -= cell(r, c);
    }
    reduced[rhs_col] -= cell(r, rhs_col);
  }

  for (;;) {
    std::size_t entering = width;
    for (std::size_t c = 0; c < vars + rows; ++c) {
      if (reduced[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& a = cell(r, entering);
      if (a <= 0) continue;
      Rational ratio = cell(r, rhs_col) / a;
      if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    // The phase-one objective is bounded below by zero.
    if (leaving == rows) throw Error("phase-one simplex reported an unbounded direction");

    const Rational pivot = cell(leaving, entering);
    for (std::size_t c = 0; c < width; ++c) {
      if (cell(leaving, c) != 0) cell(leaving, c) /= pivot;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving) continue;
      const Rational factor = cell(r, entering);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < width; ++c) {
        if (cell(leaving, c) != 0) cell(r, c) -= factor * cell(leaving, c);
      }
    }
    const Rational factor = reduced[entering];
    for (std::size_t c = 0; c < width; ++c) {
      if (cell(leaving, c) != 0) reduced[c] -= factor * cell(leaving, c);
    }
    basis[leaving] = entering;
  }

  if (reduced[rhs_col] != 0) return std::nullopt;

  std::vector<Rational> x(vars, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) x[basis[r]] = cell(r, rhs_col);
  }
  return x;
}

}  // namespace steintile::lp
