#include "steintile/pp1d.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "steintile/error.hpp"

namespace steintile::pp1d {

RationalPiecewisePoly::RationalPiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.empty() && pieces_.empty()) return;
  if (breakpoints_.size() != pieces_.size() + 1) {
    throw ValidationError("piecewise polynomial needs one more breakpoint than pieces");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw ValidationError("breakpoints must be strictly increasing");
  }
  canonicalize();
}

void RationalPiecewisePoly::canonicalize() {
  std::vector<Rational> bps;
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!polys.empty() && polys.back() == pieces_[i]) {
      bps.back() = breakpoints_[i + 1];
      continue;
    }
    if (polys.empty()) {
      if (pieces_[i].is_zero()) continue;
      bps.push_back(breakpoints_[i]);
    }
    polys.push_back(pieces_[i]);
    bps.push_back(breakpoints_[i + 1]);
  }
  while (!polys.empty() && polys.back().is_zero()) {
    polys.pop_back();
    bps.pop_back();
  }
  if (polys.empty()) bps.clear();
  breakpoints_ = std::move(bps);
  pieces_ = std::move(polys);
}

RationalPiecewisePoly RationalPiecewisePoly::from_segments(const std::vector<Segment>& segments) {
  std::vector<Rational> cuts;
  for (const auto& s : segments) {
    if (!(s.from < s.to)) continue;
    cuts.push_back(s.from);
    cuts.push_back(s.to);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.size() < 2) return {};
  std::vector<Polynomial> pieces(cuts.size() - 1);
  for (const auto& s : segments) {
    if (!(s.from < s.to) || s.poly.is_zero()) continue;
    auto lo = std::lower_bound(cuts.begin(), cuts.end(), s.from) - cuts.begin();
    auto hi = std::lower_bound(cuts.begin(), cuts.end(), s.to) - cuts.begin();
    for (auto k = lo; k < hi; ++k) pieces[static_cast<std::size_t>(k)] += s.poly;
  }
  return RationalPiecewisePoly(std::move(cuts), std::move(pieces));
}

Rational RationalPiecewisePoly::operator()(const Rational& x) const {
  if (pieces_.empty() || x < breakpoints_.front() || !(x < breakpoints_.back())) return 0;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return pieces_[i](x);
}

Rational RationalPiecewisePoly::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) total += integrate(pieces_[i], breakpoints_[i], breakpoints_[i + 1]);
  return total;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<RationalPiecewisePoly::Segment> segments_of(const RationalPiecewisePoly& f) {
  std::vector<RationalPiecewisePoly::Segment> out;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    out.push_back({f.breakpoints()[i], f.breakpoints()[i + 1], f.pieces()[i]});
  }
  return out;
}

}  // namespace

RationalPiecewisePoly indicator(const Rational& a, const Rational& b) {
  if (!(a < b)) throw ValidationError("indicator needs a < b, got [" + to_string(a) + ", " + to_string(b) + ")");
  return RationalPiecewisePoly({a, b}, {Polynomial::constant(1)});
}

RationalPiecewisePoly add(const RationalPiecewisePoly& f, const RationalPiecewisePoly& g) {
  auto segments = segments_of(f);
  auto more = segments_of(g);
  segments.insert(segments.end(), more.begin(), more.end());
  return RationalPiecewisePoly::from_segments(segments);
}

RationalPiecewisePoly scale(const Rational& c, const RationalPiecewisePoly& f) {
  if (c == 0 || f.is_zero()) return {};
  std::vector<Polynomial> pieces;
  for (const auto& p : f.pieces()) pieces.push_back(p * c);
  return RationalPiecewisePoly(f.breakpoints(), std::move(pieces));
}

RationalPiecewisePoly translate(const RationalPiecewisePoly& f, const Rational& t) {
  if (f.is_zero()) return {};
  std::vector<Rational> bps;
  for (const auto& x : f.breakpoints()) bps.push_back(x + t);
  std::vector<Polynomial> pieces;
  for (const auto& p : f.pieces()) pieces.push_back(p.shifted(-t));
  return RationalPiecewisePoly(std::move(bps), std::move(pieces));
}

RationalPiecewisePoly dilate(const RationalPiecewisePoly& f, const Rational& s) {
  if (!(s > 0)) throw ValidationError("dilation factor must be positive");
  if (f.is_zero()) return {};
  std::vector<Rational> bps;
  for (const auto& x : f.breakpoints()) bps.push_back(x * s);
  std::vector<Polynomial> pieces;
  const Rational inv = 1 / s;
  for (const auto& p : f.pieces()) pieces.push_back(p.dilated(inv));
  return RationalPiecewisePoly(std::move(bps), std::move(pieces));
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

// Polynomial in t whose coefficients are polynomials in x; index = power of t.
using TPoly = std::vector<Polynomial>;

Rational binomial(std::size_t n, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
  return r;
}

// p(t) * q(x - t) as a polynomial in t over Q[x].
TPoly product_kernel(const Polynomial& p, const Polynomial& q) {
  const auto& pc = p.coefficients();
  const auto& qc = q.coefficients();
  if (pc.empty() || qc.empty()) return {};
  // q(x - t) = sum_j q_j sum_k C(j,k) (-1)^k x^{j-k} t^k.
  TPoly q_shift(qc.size());
  for (std::size_t j = 0; j < qc.size(); ++j) {
    if (qc[j] == 0) continue;
    for (std::size_t k = 0; k <= j; ++k) {
      Rational c = qc[j] * binomial(j, k);
      if (k % 2 == 1) c = -c;
      q_shift[k] += Polynomial::monomial(c, j - k);
    }
  }
  TPoly out(pc.size() + qc.size() - 1);
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i] == 0) continue;
    for (std::size_t k = 0; k < q_shift.size(); ++k) out[i + k] += q_shift[k] * pc[i];
  }
  return out;
}

// Integral over t from lower(x) to upper(x) of the kernel.
Polynomial integrate_kernel(const TPoly& kernel, const Polynomial& lower, const Polynomial& upper) {
  Polynomial out;
  Polynomial lower_pow = lower;
  Polynomial upper_pow = upper;
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    const Rational inv = Rational(1) / static_cast<long>(k + 1);
    if (!kernel[k].is_zero()) out += kernel[k] * (upper_pow - lower_pow) * inv;
    upper_pow = upper_pow * upper;
    lower_pow = lower_pow * lower;
  }
  return out;
}

}  // namespace

RationalPiecewisePoly convolve(const RationalPiecewisePoly& f, const RationalPiecewisePoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<RationalPiecewisePoly::Segment> segments;
  const Polynomial x = Polynomial({Rational(0), Rational(1)});
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const Polynomial& p = f.pieces()[i];
    if (p.is_zero()) continue;
    const Rational& a = f.breakpoints()[i];
    const Rational& b = f.breakpoints()[i + 1];
    for (std::size_t j = 0; j < g.piece_count(); ++j) {
      const Polynomial& q = g.pieces()[j];
      if (q.is_zero()) continue;
      const Rational& c = g.breakpoints()[j];
      const Rational& d = g.breakpoints()[j + 1];
      const TPoly kernel = product_kernel(p, q);
      const Polynomial lo_a = Polynomial::constant(a);
      const Polynomial hi_b = Polynomial::constant(b);
      const Polynomial lo_xd = x - Polynomial::constant(d);
      const Polynomial hi_xc = x - Polynomial::constant(c);
      const Rational mid1 = std::min(a + d, b + c);
      const Rational mid2 = std::max(a + d, b + c);
      // t ranges over [a, b) intersected with (x - d, x - c].
      segments.push_back({a + c, mid1, integrate_kernel(kernel, lo_a, hi_xc)});
      if (a + d <= b + c) {
        segments.push_back({mid1, mid2, integrate_kernel(kernel, lo_xd, hi_xc)});
      } else {
        segments.push_back({mid1, mid2, integrate_kernel(kernel, lo_a, hi_b)});
      }
      segments.push_back({mid2, b + d, integrate_kernel(kernel, lo_xd, hi_b)});
    }
  }
  return RationalPiecewisePoly::from_segments(segments);
}

// ---------------------------------------------------------------------------

RationalPiecewisePoly fold(const RationalPiecewisePoly& f, const Rational& lambda) {
  if (!(lambda > 0)) throw ValidationError("fold period must be positive, got " + to_string(lambda));
  std::vector<RationalPiecewisePoly::Segment> segments;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const Rational& a = f.breakpoints()[i];
    const Rational& b = f.breakpoints()[i + 1];
    const Polynomial& p = f.pieces()[i];
    if (p.is_zero()) continue;
    const Integer k_first = floor_of(a / lambda);
    const Integer k_last = ceil_of(b / lambda) - 1;
    for (Integer k = k_first; k <= k_last; ++k) {
      const Rational shift = Rational(k) * lambda;
      const Rational lo = std::max(a, shift);
      const Rational hi = std::min(b, Rational(shift + lambda));
      if (!(lo < hi)) continue;
      segments.push_back({lo - shift, hi - shift, p.shifted(shift)});
    }
  }
  return RationalPiecewisePoly::from_segments(segments);
}

TilingLevel1d tiling_level_1d(const RationalPiecewisePoly& f, const Rational& lambda) {
  const RationalPiecewisePoly folded = fold(f, lambda);
  if (folded.is_zero()) return {Rational(0), std::nullopt};
  // Cover [0, lambda) explicitly, zero gaps included.
  std::vector<Interval> spans;
  std::vector<Polynomial> polys;
  const auto& bps = folded.breakpoints();
  if (bps.front() > 0) {
    spans.push_back({Rational(0), bps.front()});
    polys.emplace_back();
  }
  for (std::size_t i = 0; i < folded.piece_count(); ++i) {
    spans.push_back(folded.piece_interval(i));
    polys.push_back(folded.pieces()[i]);
  }
  if (bps.back() < lambda) {
    spans.push_back({bps.back(), lambda});
    polys.emplace_back();
  }
  if (spans.size() == 1 && polys.front().is_constant()) {
    const auto& c = polys.front().coefficients();
    return {c.empty() ? Rational(0) : c.front(), std::nullopt};
  }
  if (!polys.front().is_constant()) return {std::nullopt, spans.front()};
  // Canonical pieces differ from their neighbours, so the second span differs
  // from the first.
  return {std::nullopt, spans[1]};
}

SupportStats support_stats(const RationalPiecewisePoly& f) {
  if (f.is_zero()) return {Rational(0), Rational(0), {Rational(0), Rational(0)}};
  Rational measure = 0;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (!f.pieces()[i].is_zero()) measure += f.piece_interval(i).length();
  }
  const Interval hull{f.breakpoints().front(), f.breakpoints().back()};
  return {measure, hull.length(), hull};
}

RationalPiecewisePoly convolution_tile(const std::vector<Rational>& lengths) {
  if (lengths.empty()) throw ValidationError("convolution tile needs at least one lattice");
  RationalPiecewisePoly out;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    if (!(lengths[j] > 0)) throw ValidationError("lattice spacings must be positive, got " + to_string(lengths[j]));
    const auto factor = indicator(0, lengths[j]);
    out = j == 0 ? factor : convolve(out, factor);
  }
  return out;
}

RationalPiecewisePoly discrete_to_continuous(const tiling::GroupFunction& f, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw ValidationError("discrete_to_continuous needs m, n >= 1");
  if (std::gcd(m, n) != 1) throw ValidationError("discrete_to_continuous needs gcd(m, n) = 1");
  const auto& group = f.group();
  if (group.is_quotient() || group.orders() != std::vector<std::int64_t>{m * n}) {
    throw ValidationError("function must live on Z_" + std::to_string(m * n));
  }
  const auto gen_m = abelian::GroupElement{m % (m * n)};
  const auto gen_n = abelian::GroupElement{n % (m * n)};
  const auto sub_m = abelian::subgroup_from_generators(group, std::span(&gen_m, 1));
  const auto sub_n = abelian::subgroup_from_generators(group, std::span(&gen_n, 1));
  if (!tiling::tiles_normalized(f, sub_m)) {
    throw ValidationError("f does not tile <" + std::to_string(m) + "> at level " + std::to_string(n));
  }
  if (!tiling::tiles_normalized(f, sub_n)) {
    throw ValidationError("f does not tile <" + std::to_string(n) + "> at level " + std::to_string(m));
  }
  std::vector<RationalPiecewisePoly::Segment> segments;
  for (const auto& [j, v] : f.values()) {
    const Rational at = static_cast<long>(j);
    segments.push_back({at, at + 1, Polynomial::constant(v)});
  }
  return RationalPiecewisePoly::from_segments(segments);
}

Rational steinhaus_lb(const Rational& alpha) {
  if (!(alpha > 0) || !(alpha < 1)) throw ValidationError("alpha must lie in (0, 1), got " + to_string(alpha));
  return Rational(ceil_of(1 / alpha)) * alpha;
}

}  // namespace steintile::pp1d
