#pragma once

// Compactly supported functions on the line with rational breakpoints and
// rational polynomial pieces. Piece i lives on the half-open interval
// [x_i, x_{i+1}), so periodized sums are exact at every point.

#include <optional>
#include <vector>

#include "steintile/group_tiling.hpp"
#include "steintile/polynomial.hpp"
#include "steintile/rational.hpp"

namespace steintile::pp1d {

struct Interval {
  Rational from;
  Rational to;
  Rational length() const { return to - from; }
  bool operator==(const Interval&) const = default;
};

class RationalPiecewisePoly {
 public:
  /// The zero function.
  RationalPiecewisePoly() = default;

  /// Throws ValidationError unless breakpoints strictly increase and there is
  /// one piece per gap. The result is canonicalized.
  RationalPiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

  /// Sum of possibly overlapping (interval, polynomial) segments.
  struct Segment {
    Rational from;
    Rational to;
    Polynomial poly;
  };
  static RationalPiecewisePoly from_segments(const std::vector<Segment>& segments);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }
  Interval piece_interval(std::size_t i) const { return {breakpoints_[i], breakpoints_[i + 1]}; }
  bool is_zero() const { return pieces_.empty(); }

  Rational operator()(const Rational& x) const;
  Rational integral() const;

  bool operator==(const RationalPiecewisePoly&) const = default;

 private:
  void canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
};

/// 1 on [a, b). Throws ValidationError when a >= b.
RationalPiecewisePoly indicator(const Rational& a, const Rational& b);

RationalPiecewisePoly add(const RationalPiecewisePoly& f, const RationalPiecewisePoly& g);
RationalPiecewisePoly scale(const Rational& c, const RationalPiecewisePoly& f);
/// x -> f(x - t).
RationalPiecewisePoly translate(const RationalPiecewisePoly& f, const Rational& t);
/// x -> f(x / s) for s > 0; stretches the support by s.
RationalPiecewisePoly dilate(const RationalPiecewisePoly& f, const Rational& s);

RationalPiecewisePoly convolve(const RationalPiecewisePoly& f, const RationalPiecewisePoly& g);

/// sum over k in Z of f(x + k*lambda), restricted to [0, lambda).
RationalPiecewisePoly fold(const RationalPiecewisePoly& f, const Rational& lambda);

struct TilingLevel1d {
  std::optional<Rational> level;
  /// On failure: a piece of the fold on which its value differs from the
  /// value at 0 (or the first piece, when that piece is not constant).
  std::optional<Interval> witness;
  bool tiles() const { return level.has_value(); }
};

TilingLevel1d tiling_level_1d(const RationalPiecewisePoly& f, const Rational& lambda);

struct SupportStats {
  Rational measure;
  Rational diameter;
  Interval hull;
};

SupportStats support_stats(const RationalPiecewisePoly& f);

/// 1_[0,l1) * 1_[0,l2) * ... * 1_[0,lN). Throws ValidationError for an empty
/// list or a nonpositive length.
RationalPiecewisePoly convolution_tile(const std::vector<Rational>& lengths);

/// F = sum_j f(j) 1_[j, j+1) for f on Z_{mn} tiling <m> at level n and <n> at
/// level m (gcd(m, n) = 1). F then tiles mZ at level n and nZ at level m.
RationalPiecewisePoly discrete_to_continuous(const tiling::GroupFunction& f, std::int64_t m, std::int64_t n);

/// ceil(1/alpha) * alpha for alpha in (0, 1).
Rational steinhaus_lb(const Rational& alpha);

}  // namespace steintile::pp1d
