#pragma once

// Counting integers with a divisor in (N, 2N].

#include <cstdint>
#include <optional>
#include <string>

#include "steintile/rational.hpp"

namespace steintile::density {

inline constexpr std::int64_t kMaxExactN = 15;
inline constexpr std::int64_t kMaxInclusionExclusionN = 24;
inline constexpr std::int64_t kMaxSieveWindow = 100'000'000;
inline constexpr double kTenenbaumDelta = 0.086071;
inline constexpr const char* kTenenbaumDeltaText = "0.086071";

/// Natural density of {n >= 1 : some q in {N+1, ..., 2N} divides n}.
/// Inclusion-exclusion over all 2^N subsets; needs 1 <= N <= 15.
Rational multiples_density_exact(std::int64_t N);

/// Count in [1, X] by marking multiples; X <= 1e8.
std::uint64_t multiples_count_sieve(std::int64_t N, std::int64_t X);

/// Count in [1, X] as sum_S (-1)^{|S|+1} floor(X / lcm S), skipping subsets
/// whose lcm exceeds X. Needs N <= 24.
std::uint64_t multiples_count_inclusion_exclusion(std::int64_t N, std::int64_t X);

/// (ln N)^{-delta}; reporting only. Needs N >= 3.
double tenenbaum_reference(std::int64_t N);

/// Count in [1, 2N^2].
std::uint64_t union_count_window(std::int64_t N);

struct DensityReport {
  std::int64_t N;
  std::int64_t X;
  std::optional<Rational> exact_density;
  std::uint64_t sieve_count;
  std::optional<double> reference_bound;
  /// |sieve_count - exact_density * X| when the exact value is known.
  std::optional<Rational> deviation;
};

DensityReport density_report(std::int64_t N, std::int64_t X);

}  // namespace steintile::density
