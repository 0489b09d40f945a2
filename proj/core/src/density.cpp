#include "steintile/density.hpp"

#include <cmath>
#include <vector>

#include "steintile/error.hpp"

namespace steintile::density {

namespace {

void check_n(std::int64_t N, std::int64_t max) {
  if (N < 1) throw ValidationError("N must be at least 1");
  if (N > max) throw CapExceeded("N = " + std::to_string(N) + " exceeds the cap " + std::to_string(max));
}

void check_window(std::int64_t X) {
  if (X < 0) throw ValidationError("X must be nonnegative");
  if (X > kMaxSieveWindow) throw CapExceeded("window " + std::to_string(X) + " exceeds the cap 1e8");
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Subsets of {N+1..2N} from index i on, with running lcm <= X.
void ie_walk(std::int64_t N, std::int64_t X, std::int64_t i, std::int64_t l, int sign, std::int64_t& total) {
  for (std::int64_t q = N + 1 + i; q <= 2 * N; ++q) {
    const std::int64_t g = gcd64(l, q);
    const std::int64_t step = q / g;
    if (l > X / step) continue;  // lcm > X, and so for every superset
    const std::int64_t next = l * step;
    total += sign * (X / next);
    ie_walk(N, X, q - N, next, -sign, total);
  }
}

}  // namespace

Rational multiples_density_exact(std::int64_t N) {
  check_n(N, kMaxExactN);
  const std::uint32_t subsets = 1U << N;
  Rational density = 0;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    Integer l = 1;
    int bits = 0;
    for (std::int64_t j = 0; j < N; ++j) {
      if ((mask >> j) & 1U) {
        l = lcm(l, Integer(N + 1 + j));
        ++bits;
      }
    }
    const Rational term(Integer(1), l);
    if (bits % 2 == 1) {
      density += term;
    } else {
      density -= term;
    }
  }
  return density;
}

std::uint64_t multiples_count_sieve(std::int64_t N, std::int64_t X) {
  check_n(N, kMaxSieveWindow);
  check_window(X);
  std::vector<bool> hit(static_cast<std::size_t>(X) + 1, false);
  for (std::int64_t q = N + 1; q <= 2 * N && q <= X; ++q) {
    for (std::int64_t k = q; k <= X; k += q) hit[static_cast<std::size_t>(k)] = true;
  }
  std::uint64_t count = 0;
  for (std::int64_t k = 1; k <= X; ++k) count += hit[static_cast<std::size_t>(k)] ? 1 : 0;
  return count;
}

std::uint64_t multiples_count_inclusion_exclusion(std::int64_t N, std::int64_t X) {
  check_n(N, kMaxInclusionExclusionN);
  if (X < 0) throw ValidationError("X must be nonnegative");
  std::int64_t total = 0;
  ie_walk(N, X, 0, 1, 1, total);
  return static_cast<std::uint64_t>(total);
}

double tenenbaum_reference(std::int64_t N) {
  if (N < 3) throw ValidationError("the reference value needs N >= 3");
  return std::pow(std::log(static_cast<double>(N)), -kTenenbaumDelta);
}

std::uint64_t union_count_window(std::int64_t N) {
  if (N < 1) throw ValidationError("N must be at least 1");
  if (N > 1'000'000 || 2 * N * N > kMaxSieveWindow) throw CapExceeded("window 2N^2 exceeds the cap 1e8");
  return multiples_count_sieve(N, 2 * N * N);
}

DensityReport density_report(std::int64_t N, std::int64_t X) {
  DensityReport report{N, X, std::nullopt, multiples_count_sieve(N, X), std::nullopt, std::nullopt};
  if (N <= kMaxExactN) {
    report.exact_density = multiples_density_exact(N);
    report.deviation = abs(Rational(static_cast<long long>(report.sieve_count)) - *report.exact_density * X);
  }
  if (N >= 3) report.reference_bound = tenenbaum_reference(N);
  return report;
}

}  // namespace steintile::density
