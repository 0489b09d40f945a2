#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "steintile/rational.hpp"

namespace steintile::testing {

inline Rational Q(std::string_view text) { return parse_rational(text); }

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const auto den = uniform(rng, 1, max_den);
  return Rational(uniform(rng, lo * den, hi * den), den);
}

inline Rational random_positive(Rng& rng, std::int64_t hi, std::int64_t max_den) {
  const auto den = uniform(rng, 1, max_den);
  return Rational(uniform(rng, 1, hi * den), den);
}

}  // namespace steintile::testing
