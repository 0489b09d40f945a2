#pragma once

#include <optional>
#include <vector>

#include "steintile/rational.hpp"

namespace steintile::lp {

/// Dense equality system A x = b over the rationals.
struct EqualitySystem {
  std::vector<std::vector<Rational>> rows;  // each of length `variables`
  std::vector<Rational> rhs;
  std::size_t variables = 0;
};

/// Decides whether {x >= 0 : A x = b} is nonempty using an exact phase-one
/// simplex with Bland's rule. Returns a basic feasible point when it is.
std::optional<std::vector<Rational>> find_nonnegative_solution(const EqualitySystem& system);

}  // namespace steintile::lp
