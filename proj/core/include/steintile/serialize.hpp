#pragma once

// JSON and CSV encodings. Rationals are reduced "p/q" strings ("p" for
// integers); key order is fixed so identical values give identical bytes.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "steintile/abelian.hpp"
#include "steintile/copula.hpp"
#include "steintile/density.hpp"
#include "steintile/group_tiling.hpp"
#include "steintile/lattice.hpp"
#include "steintile/pp1d.hpp"
#include "steintile/rational.hpp"

namespace steintile::serialize {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const abelian::GroupElement& x);
/// Sorted array of element tuples.
Json to_json(const abelian::Subgroup& h);

/// {"group":[d1,...],"values":[{"at":[...],"v":"p/q"}]}. A quotient adds
/// "kernel" and labels cosets by their smallest parent element.
Json to_json(const tiling::GroupFunction& f);
/// Parses the product-group form; values must be nonnegative.
tiling::GroupFunction group_function_from_json(const Json& j);

Json to_json(const copula::CopulaMatrix& a);
/// One row per line, entries "p/q".
std::string to_csv(const copula::CopulaMatrix& a);

/// [{"from":"p/q","to":"p/q","coeffs":["p/q",...]}], coefficients low to high in x.
Json to_json(const pp1d::RationalPiecewisePoly& f);
/// Overlapping pieces add; an empty or reversed piece is a ValidationError.
pp1d::RationalPiecewisePoly piecewise_from_json(const Json& j);
/// x,f(x) at `samples` + 1 equally spaced points over the support hull.
std::string sample_csv(const pp1d::RationalPiecewisePoly& f, std::size_t samples);

/// {"d":2,"basis":[["p/q",...],...],"volume":"p/q"} with the canonical basis.
Json to_json(const lattice::RationalLattice& l);
/// Accepts {"basis":[[...],...]}; the basis need not be canonical.
lattice::RationalLattice lattice_from_json(const Json& j);

Json to_json(const lattice::Box& b);
Json to_json(const density::DensityReport& r);

/// Shortest decimal text that round-trips the double.
std::string decimal(double x);

}  // namespace steintile::serialize
