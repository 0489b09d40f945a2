#include "steintile/serialize.hpp"

#include <charconv>
#include <sstream>

#include "steintile/error.hpp"

namespace steintile::serialize {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ValidationError("expected a rational as \"p/q\", got " + j.dump());
}

Json to_json(const abelian::GroupElement& x) { return Json(x.coordinates); }

Json to_json(const abelian::Subgroup& h) {
  Json out = Json::array();
  for (const auto& x : h.elements()) out.push_back(to_json(x));
  return out;
}

Json to_json(const tiling::GroupFunction& f) {
  const auto& g = f.group();
  Json out;
  out["group"] = g.orders();
  if (g.is_quotient()) {
    const auto parent = g.parent();
    Json kernel = Json::array();
    // The identity coset holds exactly the kernel.
    for (std::size_t i = 0; i < parent.order(); ++i) {
      if (g.index_of(parent.element(i)) == g.identity()) kernel.push_back(to_json(parent.element(i)));
    }
    out["kernel"] = std::move(kernel);
  }
  Json values = Json::array();
  for (const auto& [index, v] : f.values()) {
    Json entry;
    entry["at"] = to_json(g.element(index));
    entry["v"] = to_json(v);
    values.push_back(std::move(entry));
  }
  out["values"] = std::move(values);
  return out;
}

tiling::GroupFunction group_function_from_json(const Json& j) {
  try {
    auto group = abelian::FiniteAbelianGroup::product(j.at("group").get<std::vector<std::int64_t>>());
    tiling::GroupFunction f(group);
    for (const auto& entry : j.at("values")) {
      abelian::GroupElement x(entry.at("at").get<std::vector<std::int64_t>>());
      f.add(group.index_of(x), rational_from_json(entry.at("v")));
    }
    return f;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed group function: ") + e.what());
  }
}

Json to_json(const copula::CopulaMatrix& a) {
  Json rows = Json::array();
  for (const auto& row : a.rows()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  Json out;
  out["m"] = a.m();
  out["n"] = a.n();
  out["rows"] = std::move(rows);
  return out;
}

std::string to_csv(const copula::CopulaMatrix& a) {
  std::string out;
  for (const auto& row : a.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

Json to_json(const pp1d::RationalPiecewisePoly& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    Json piece;
    const auto iv = f.piece_interval(i);
    piece["from"] = to_json(iv.from);
    piece["to"] = to_json(iv.to);
    Json coeffs = Json::array();
    for (const auto& c : f.pieces()[i].coefficients()) coeffs.push_back(to_json(c));
    piece["coeffs"] = std::move(coeffs);
    out.push_back(std::move(piece));
  }
  return out;
}

pp1d::RationalPiecewisePoly piecewise_from_json(const Json& j) {
  try {
    std::vector<pp1d::RationalPiecewisePoly::Segment> segments;
    for (const auto& piece : j) {
      std::vector<Rational> coeffs;
      for (const auto& c : piece.at("coeffs")) coeffs.push_back(rational_from_json(c));
      Rational from = rational_from_json(piece.at("from"));
      Rational to = rational_from_json(piece.at("to"));
      if (!(from < to)) throw ValidationError("piece [" + to_string(from) + ", " + to_string(to) + ") is empty");
      segments.push_back({std::move(from), std::move(to), pp1d::Polynomial(std::move(coeffs))});
    }
    return pp1d::RationalPiecewisePoly::from_segments(segments);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed piecewise polynomial: ") + e.what());
  }
}

std::string sample_csv(const pp1d::RationalPiecewisePoly& f, std::size_t samples) {
  if (samples == 0) throw ValidationError("need at least one sample interval");
  std::string out = "x,f\n";
  if (f.is_zero()) return out;
  const auto& bp = f.breakpoints();
  const Rational from = bp.front();
  const Rational step = (bp.back() - from) / Rational(static_cast<long long>(samples));
  for (std::size_t k = 0; k <= samples; ++k) {
    const Rational x = from + step * Rational(static_cast<long long>(k));
    out += decimal(x.convert_to<double>()) + ',' + decimal(f(x).convert_to<double>()) + '\n';
  }
  return out;
}

Json to_json(const lattice::RationalLattice& l) {
  Json basis = Json::array();
  for (const auto& row : l.basis()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    basis.push_back(std::move(r));
  }
  Json out;
  out["d"] = l.dimension();
  out["basis"] = std::move(basis);
  out["volume"] = to_json(l.volume());
  return out;
}

lattice::RationalLattice lattice_from_json(const Json& j) {
  try {
    lattice::RationalMatrix basis;
    for (const auto& row : j.at("basis")) {
      lattice::RationalVector v;
      for (const auto& x : row) v.push_back(rational_from_json(x));
      basis.push_back(std::move(v));
    }
    return lattice::make_lattice(basis);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed lattice: ") + e.what());
  }
}

Json to_json(const lattice::Box& b) {
  Json sides = Json::array();
  for (const auto& s : b.sides) sides.push_back(to_json(s));
  return sides;
}

Json to_json(const density::DensityReport& r) {
  Json out;
  out["N"] = r.N;
  out["X"] = r.X;
  out["exact_density"] = r.exact_density ? to_json(*r.exact_density) : Json(nullptr);
  out["sieve_count"] = r.sieve_count;
  out["deviation"] = r.deviation ? to_json(*r.deviation) : Json(nullptr);
  out["reference_bound"] = r.reference_bound ? Json(decimal(*r.reference_bound)) : Json(nullptr);
  out["delta"] = density::kTenenbaumDeltaText;
  return out;
}

std::string decimal(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace steintile::serialize
