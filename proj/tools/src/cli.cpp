#include "steintile/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "steintile/abelian.hpp"
#include "steintile/copula.hpp"
#include "steintile/density.hpp"
#include "steintile/error.hpp"
#include "steintile/group_tiling.hpp"
#include "steintile/lattice.hpp"
#include "steintile/pp1d.hpp"
#include "steintile/repro.hpp"
#include "steintile/serialize.hpp"

namespace steintile::cli {

namespace {

using serialize::Json;
using serialize::to_json;

struct Output {
  Json json;
  std::optional<std::string> csv;
  bool failed = false;  // a check ran and did not pass
};

// ---------------------------------------------------------------------------
// Argument parsing

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t()[]");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t()[]");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& text) {
  const Rational q = parse_rational(trim(text));
  if (!is_integer(q)) throw ValidationError("expected an integer, got \"" + text + "\"");
  return to_int64(q);
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  if (out.empty()) throw ValidationError("expected a comma-separated list of integers");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_rational(trim(part)));
  if (out.empty()) throw ValidationError("expected a comma-separated list of rationals");
  return out;
}

// "1,0;0,1" -> two elements.
std::vector<abelian::GroupElement> parse_elements(const std::string& text) {
  std::vector<abelian::GroupElement> out;
  for (const auto& part : split(text, ';')) out.emplace_back(parse_ints(part));
  return out;
}

lattice::RationalMatrix parse_matrix(const std::string& text) {
  lattice::RationalMatrix out;
  for (const auto& part : split(text, ';')) out.push_back(parse_rationals(part));
  return out;
}

Json read_json_argument(const std::string& inline_text, const std::string& path) {
  std::string text = inline_text;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (text.empty()) throw ValidationError("no input given");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON input: ") + e.what());
  }
}

int checked_side(std::int64_t v, const char* name) {
  if (v < 1 || v > 1000) throw ValidationError(std::string(name) + " must lie in [1, 1000]");
  return static_cast<int>(v);
}

// ---------------------------------------------------------------------------
// Pretty printing

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& v) { return v.is_primitive(); });
}

std::string grid(const std::vector<std::vector<std::string>>& rows, int indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::string out;
  for (const auto& row : rows) {
    out += std::string(static_cast<std::size_t>(indent), ' ');
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += "  ";
      out += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out += '\n';
  }
  return out;
}

std::string pretty(const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_primitive()) return pad + scalar_text(v) + '\n';
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, value] : v.items()) {
      if (value.is_primitive()) {
        out += pad + key + ": " + scalar_text(value) + '\n';
      } else if (value.is_array() && all_scalars(value) && value.size() <= 16) {
        std::string line;
        for (const auto& x : value) line += (line.empty() ? "" : " ") + scalar_text(x);
        out += pad + key + ": [" + line + "]\n";
      } else {
        out += pad + key + ":\n" + pretty(value, indent + 2);
      }
    }
    return out;
  }
  // arrays
  if (v.empty()) return pad + "(none)\n";
  if (all_scalars(v)) {
    std::vector<std::vector<std::string>> rows(1);
    for (const auto& x : v) rows[0].push_back(scalar_text(x));
    return grid(rows, indent);
  }
  const bool matrix = std::all_of(v.begin(), v.end(), [](const Json& r) { return r.is_array() && all_scalars(r); });
  if (matrix) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : v) {
      rows.emplace_back();
      for (const auto& x : r) rows.back().push_back(scalar_text(x));
    }
    return grid(rows, indent);
  }
  const bool records = std::all_of(v.begin(), v.end(), [&](const Json& r) {
    if (!r.is_object() || r.size() != v.front().size()) return false;
    for (const auto& [key, value] : r.items()) {
      if (!value.is_primitive() || !v.front().contains(key)) return false;
    }
    return true;
  });
  if (records) {
    std::vector<std::vector<std::string>> rows(1);
    for (const auto& [key, value] : v.front().items()) rows[0].push_back(key);
    for (const auto& r : v) {
      rows.emplace_back();
      for (const auto& key : rows[0]) rows.back().push_back(scalar_text(r.at(key)));
    }
    return grid(rows, indent);
  }
  std::string out;
  for (const auto& x : v) out += pad + "-\n" + pretty(x, indent + 2);
  return out;
}

// ---------------------------------------------------------------------------
// Shared result pieces

Json certificate_json(const tiling::TilingCheck& check) {
  if (const auto* cert = std::get_if<tiling::TilingCertificate>(&check)) {
    return {{"tiles", true},
            {"level", to_json(cert->level)},
            {"normalized", cert->normalized},
            {"subgroup_order", cert->subgroup.order()}};
  }
  const auto& fail = std::get<tiling::TilingFailure>(check);
  return {{"tiles", false},
          {"x", to_json(fail.x)},
          {"sum_at_x", to_json(fail.sum_at_x)},
          {"x_prime", to_json(fail.x_prime)},
          {"sum_at_x_prime", to_json(fail.sum_at_x_prime)}};
}

Json level_json(const pp1d::TilingLevel1d& t) {
  Json out{{"tiles", t.tiles()}};
  out["level"] = t.level ? to_json(*t.level) : Json(nullptr);
  if (t.witness) out["witness"] = {{"from", to_json(t.witness->from)}, {"to", to_json(t.witness->to)}};
  return out;
}

Json support_json(const pp1d::RationalPiecewisePoly& f) {
  if (f.is_zero()) return {{"measure", "0"}, {"diameter", "0"}};
  const auto s = pp1d::support_stats(f);
  return {{"measure", to_json(s.measure)},
          {"diameter", to_json(s.diameter)},
          {"hull", {to_json(s.hull.from), to_json(s.hull.to)}}};
}

unsigned default_threads() {
  if (const char* env = std::getenv("STEINTILE_THREADS")) {
    const auto v = parse_int(env);
    if (v < 1 || v > 1024) throw ValidationError("STEINTILE_THREADS must lie in [1, 1024]");
    return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

RunResult run(const std::vector<std::string>& argv) {
  RunResult result;
  CLI::App app{"Exact common tiles of subgroups and lattices", argv.empty() ? "steintile" : argv.front()};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty_flag = false;
  bool csv_flag = false;
  std::int64_t threads_arg = 0;
  app.add_flag("--pretty", pretty_flag, "Human-readable output");
  app.add_flag("--csv", csv_flag, "CSV output where the result is tabular");
  app.add_option("--threads", threads_arg, "Worker threads (default: STEINTILE_THREADS or 1)");

  std::function<Output()> handler;

  // ---- copula -------------------------------------------------------------
  auto* copula_cmd = app.add_subcommand("copula", "Minimal-support copula matrices");
  copula_cmd->require_subcommand(1);

  std::int64_t cm = 0;
  std::int64_t cn = 0;
  std::int64_t ck = 0;
  std::int64_t max_short = copula::SearchOptions{}.max_short_side;
  std::int64_t max_long = copula::SearchOptions{}.max_long_side;
  auto* cms = copula_cmd->add_subcommand("min-support", "Exact S(m, n) with a witness");
  cms->add_option("-m", cm, "Rows")->required();
  cms->add_option("-n", cn, "Columns")->required();
  cms->add_option("--max-short", max_short, "Cap on min(m, n)");
  cms->add_option("--max-long", max_long, "Cap on max(m, n)");
  cms->callback([&] {
    handler = [&] {
      copula::SearchOptions opts{checked_side(max_short, "--max-short"), checked_side(max_long, "--max-long")};
      const auto res = copula::min_support_exact(checked_side(cm, "-m"), checked_side(cn, "-n"), opts);
      Output out;
      out.json = {{"m", cm},
                  {"n", cn},
                  {"S", res.S},
                  {"witness", to_json(res.witness)["rows"]},
                  {"lower_bound", res.lower_bound},
                  {"nw_blocks_support", res.nw_blocks_support},
                  {"patterns_tested", res.patterns_tested}};
      out.csv = serialize::to_csv(res.witness);
      return out;
    };
  });

  std::string kind = "lmr";
  auto* ccon = copula_cmd->add_subcommand("construct", "lmr(m, k) or nw-blocks(m, n)");
  ccon->add_option("--kind", kind, "lmr or nw-blocks")->check(CLI::IsMember({"lmr", "nw-blocks"}));
  ccon->add_option("-m", cm, "Rows")->required();
  ccon->add_option("-k", ck, "lmr: columns are k*m + 1");
  ccon->add_option("-n", cn, "nw-blocks: columns");
  ccon->callback([&] {
    handler = [&] {
      std::optional<copula::CopulaMatrix> a;
      if (kind == "lmr") {
        if (ck < 1) throw ValidationError("lmr needs -k >= 1");
        a = copula::construct_lmr(checked_side(cm, "-m"), checked_side(ck, "-k"));
      } else {
        if (cn < 1) throw ValidationError("nw-blocks needs -n >= 1");
        a = copula::construct_nw_blocks(checked_side(cm, "-m"), checked_side(cn, "-n"));
      }
      Output out;
      out.json = {{"kind", kind},
                  {"m", a->m()},
                  {"n", a->n()},
                  {"support", a->support_size()},
                  {"matrix", to_json(*a)["rows"]}};
      out.csv = serialize::to_csv(*a);
      return out;
    };
  });

  std::int64_t max_m = 7;
  std::int64_t max_n = 7;
  std::int64_t min_side = 2;
  bool table_json = false;
  auto* ctab = copula_cmd->add_subcommand("table", "S(m, n) grid; CSV unless --json or --pretty");
  ctab->add_option("--max-m", max_m, "Largest m");
  ctab->add_option("--max-n", max_n, "Largest n");
  ctab->add_option("--min", min_side, "Smallest m and n");
  ctab->add_flag("--json", table_json, "JSON instead of CSV");
  ctab->callback([&] {
    handler = [&] {
      const int lo = checked_side(min_side, "--min");
      const int hm = checked_side(max_m, "--max-m");
      const int hn = checked_side(max_n, "--max-n");
      Json cells = Json::array();
      std::string csv = "m\\n";
      for (int n = lo; n <= hn; ++n) csv += ',' + std::to_string(n);
      csv += '\n';
      for (int m = lo; m <= hm; ++m) {
        csv += std::to_string(m);
        for (int n = lo; n <= hn; ++n) {
          Json cell{{"m", m}, {"n", n}};
          try {
            const auto res = copula::min_support_exact(m, n);
            cell["S"] = res.S;
            csv += ',' + std::to_string(res.S);
          } catch (const CapExceeded&) {
            cell["S"] = nullptr;
            csv += ",capped";
          }
          cells.push_back(std::move(cell));
        }
        csv += '\n';
      }
      Output out;
      out.json = {{"cells", cells}};
      out.csv = csv;
      return out;
    };
  });

  // ---- group --------------------------------------------------------------
  auto* group_cmd = app.add_subcommand("group", "Common tiles in finite abelian groups");
  group_cmd->require_subcommand(1);
  std::string orders_text;
  std::string g1_text;
  std::string g2_text;
  std::string method = "reduce";

  auto* gms = group_cmd->add_subcommand("min-support", "S for two subgroups given by generators");
  gms->add_option("--group", orders_text, "Cyclic orders, e.g. 4,2")->required();
  gms->add_option("--g1", g1_text, "Generators of G1, e.g. \"1,0\"")->required();
  gms->add_option("--g2", g2_text, "Generators of G2, e.g. \"2,0;0,1\"")->required();
  gms->add_option("--method", method, "reduce or bruteforce")->check(CLI::IsMember({"reduce", "bruteforce"}));
  gms->callback([&] {
    handler = [&] {
      const auto g = abelian::FiniteAbelianGroup::product(parse_ints(orders_text));
      const auto g1 = abelian::subgroup_from_generators(g, parse_elements(g1_text));
      const auto g2 = abelian::subgroup_from_generators(g, parse_elements(g2_text));
      tiling::BruteForceOptions bf;
      bf.threads = threads_arg > 0 ? static_cast<unsigned>(threads_arg) : default_threads();
      const auto res = method == "reduce" ? tiling::min_support(g, g1, g2) : tiling::min_support_bruteforce(g, g1, g2, bf);
      Output out;
      out.json = {{"group", g.orders()},
                  {"g1", to_json(g1)},
                  {"g2", to_json(g2)},
                  {"method", method},
                  {"S", res.S},
                  {"witness", to_json(res.witness)}};
      return out;
    };
  });

  std::string sub_text;
  std::string values_text;
  std::string function_text;
  std::string function_file;
  auto* gtc = group_cmd->add_subcommand("tile-check", "Level of f periodized over a subgroup");
  gtc->add_option("--group", orders_text, "Cyclic orders; needed with --values");
  gtc->add_option("--subgroup", sub_text, "Generators, e.g. \"2\"")->required();
  gtc->add_option("--values", values_text, "Dense values in element order, e.g. 1,0,0,1,2,2");
  gtc->add_option("--function", function_text, "Group function JSON");
  gtc->add_option("--file", function_file, "File holding group function JSON");
  gtc->callback([&] {
    handler = [&] {
      std::optional<tiling::GroupFunction> f;
      if (!values_text.empty()) {
        if (orders_text.empty()) throw ValidationError("--values needs --group");
        const auto g = abelian::FiniteAbelianGroup::product(parse_ints(orders_text));
        const auto values = parse_rationals(values_text);
        if (values.size() != g.order()) {
          throw ValidationError("expected " + std::to_string(g.order()) + " values, got " +
                                std::to_string(values.size()));
        }
        f.emplace(g);
        for (std::size_t i = 0; i < values.size(); ++i) f->set(i, values[i]);
      } else {
        f = serialize::group_function_from_json(read_json_argument(function_text, function_file));
      }
      const auto h = abelian::subgroup_from_generators(f->group(), parse_elements(sub_text));
      Output out;
      out.json = certificate_json(tiling::tiling_level(*f, h));
      out.json["function"] = to_json(*f);
      return out;
    };
  });

  auto* gcfd = group_cmd->add_subcommand("cfd", "Common fundamental domain of two subgroups");
  gcfd->add_option("--group", orders_text, "Cyclic orders")->required();
  gcfd->add_option("--g1", g1_text, "Generators of G1")->required();
  gcfd->add_option("--g2", g2_text, "Generators of G2")->required();
  gcfd->callback([&] {
    handler = [&] {
      const auto g = abelian::FiniteAbelianGroup::product(parse_ints(orders_text));
      const auto g1 = abelian::subgroup_from_generators(g, parse_elements(g1_text));
      const auto g2 = abelian::subgroup_from_generators(g, parse_elements(g2_text));
      Json domain = Json::array();
      for (const auto& x : tiling::common_fundamental_domain(g, g1, g2)) domain.push_back(to_json(x));
      Output out;
      out.json = {{"group", g.orders()}, {"index", g1.index()}, {"domain", domain}};
      return out;
    };
  });

  // ---- pp1d ---------------------------------------------------------------
  auto* pp_cmd = app.add_subcommand("pp1d", "Piecewise polynomial tiles of the line");
  pp_cmd->require_subcommand(1);
  std::string lengths_text;
  std::int64_t samples = 200;
  auto* pct = pp_cmd->add_subcommand("conv-tile", "1_[0,l1) * ... * 1_[0,lN)");
  pct->add_option("--lengths", lengths_text, "Comma-separated rationals, e.g. 1,2/3")->required();
  pct->add_option("--samples", samples, "Sample intervals for --csv");
  pct->callback([&] {
    handler = [&] {
      const auto lengths = parse_rationals(lengths_text);
      const auto tile = pp1d::convolution_tile(lengths);
      Json ls = Json::array();
      for (const auto& l : lengths) ls.push_back(to_json(l));
      Output out;
      out.json = {{"lengths", ls}, {"mass", to_json(tile.integral())}};
      const Json stats = support_json(tile);
      for (const auto& [key, value] : stats.items()) out.json[key] = value;
      out.json["tile"] = to_json(tile);
      if (samples < 1) throw ValidationError("--samples must be positive");
      out.csv = serialize::sample_csv(tile, static_cast<std::size_t>(samples));
      return out;
    };
  });

  std::string source = "min-support";
  auto* pd2c = pp_cmd->add_subcommand("d2c", "Step function from a common tile on Z_{mn}");
  pd2c->add_option("-m", cm, "First period")->required();
  pd2c->add_option("-n", cn, "Second period, coprime to m")->required();
  pd2c->add_option("--source", source, "min-support, lmr or nw-blocks")
      ->check(CLI::IsMember({"min-support", "lmr", "nw-blocks"}));
  pd2c->add_option("--samples", samples, "Sample intervals for --csv");
  pd2c->callback([&] {
    handler = [&] {
      const int m = checked_side(cm, "-m");
      const int n = checked_side(cn, "-n");
      std::optional<copula::CopulaMatrix> a;
      if (source == "lmr") {
        if ((n - 1) % m != 0 || n <= m) throw ValidationError("lmr needs n = k*m + 1 with k >= 1");
        a = copula::construct_lmr(m, (n - 1) / m);
      } else if (source == "nw-blocks") {
        a = copula::construct_nw_blocks(m, n);
      } else {
        a = copula::min_support_exact(m, n).witness;
      }
      const auto f = tiling::cyclic_tile_from_matrix(*a);
      const auto F = pp1d::discrete_to_continuous(f, m, n);
      const auto conv = pp1d::convolution_tile({Rational(m), Rational(n)});
      Output out;
      out.json = {{"m", m},
                  {"n", n},
                  {"source", source},
                  {"matrix", to_json(*a)["rows"]},
                  {"level_mZ", level_json(pp1d::tiling_level_1d(F, Rational(m)))},
                  {"level_nZ", level_json(pp1d::tiling_level_1d(F, Rational(n)))},
                  {"support", support_json(F)},
                  {"convolution_support", support_json(conv)},
                  {"discrete", to_json(f)},
                  {"tile", to_json(F)}};
      if (samples < 1) throw ValidationError("--samples must be positive");
      out.csv = serialize::sample_csv(F, static_cast<std::size_t>(samples));
      return out;
    };
  });

  std::vector<std::string> lambdas;
  auto* pver = pp_cmd->add_subcommand("verify", "Tiling levels of a piecewise polynomial");
  pver->add_option("--function", function_text, "Piecewise polynomial JSON");
  pver->add_option("--file", function_file, "File holding piecewise polynomial JSON");
  pver->add_option("--lambda", lambdas, "Period; repeatable")->required();
  pver->add_option("--samples", samples, "Sample intervals for --csv");
  pver->callback([&] {
    handler = [&] {
      const auto f = serialize::piecewise_from_json(read_json_argument(function_text, function_file));
      Json checks = Json::array();
      bool all = true;
      for (const auto& text : lambdas) {
        const Rational lambda = parse_rational(text);
        auto level = level_json(pp1d::tiling_level_1d(f, lambda));
        all = all && level.at("tiles").get<bool>();
        Json entry{{"lambda", to_json(lambda)}};
        for (const auto& [key, value] : level.items()) entry[key] = value;
        checks.push_back(std::move(entry));
      }
      Output out;
      out.json = {{"mass", to_json(f.integral())}, {"support", support_json(f)}, {"all_tile", all}, {"checks", checks}};
      if (samples < 1) throw ValidationError("--samples must be positive");
      out.csv = serialize::sample_csv(f, static_cast<std::size_t>(samples));
      return out;
    };
  });

  std::string alpha_text;
  auto* pbound = pp_cmd->add_subcommand("bound", "Measure lower bound for common tiles of Z and alpha Z");
  pbound->add_option("--alpha", alpha_text, "Rational in (0, 1)")->required();
  pbound->callback([&] {
    handler = [&] {
      const Rational alpha = parse_rational(alpha_text);
      Output out;
      out.json = {{"alpha", to_json(alpha)}, {"lower_bound", to_json(pp1d::steinhaus_lb(alpha))}};
      return out;
    };
  });

  // ---- lattice ------------------------------------------------------------
  auto* lat_cmd = app.add_subcommand("lattice", "Rational lattices");
  lat_cmd->require_subcommand(1);
  std::int64_t lp = 0;
  std::int64_t ld = 0;
  std::int64_t verify_samples = 0;
  std::uint64_t seed = 1;
  bool list_lattices = false;
  auto* lmr = lat_cmd->add_subcommand("many-relations", "Lattices (pZ)^d + G over cyclic G in Z_p^d");
  lmr->add_option("-p", lp, "Prime")->required();
  lmr->add_option("-d", ld, "Dimension >= 2")->required();
  lmr->add_option("--verify-samples", verify_samples, "Random points per lattice for the multiplicity check");
  lmr->add_option("--seed", seed, "Seed for the sample points");
  lmr->add_flag("--lattices", list_lattices, "Include every lattice basis");
  lmr->callback([&] {
    handler = [&] {
      if (ld < 2 || ld > 64) throw ValidationError("-d must lie in [2, 64]");
      const auto family = lattice::many_relations_family(lp, static_cast<std::size_t>(ld));
      const auto& sc = family.scaled;
      Json scaled{{"volume", to_json(sc.volume)},
                  {"tile_diameter_squared",
                   sc.tile_diameter_squared ? to_json(*sc.tile_diameter_squared) : Json(nullptr)},
                  {"tile_diameter_squared_symbolic",
                   {{"numerator", to_json(sc.diameter_squared_numerator)},
                    {"count", sc.diameter_squared_count},
                    {"exponent", to_json(Rational(2, ld))}}},
                  {"tile_diameter_squared_approx", serialize::decimal(sc.tile_diameter_squared_approx)},
                  {"asymptotic_diameter_approx", serialize::decimal(sc.asymptotic_diameter_approx)}};
      Output out;
      out.json = {{"p", lp},
                  {"d", ld},
                  {"count", family.count},
                  {"volume", to_json(family.volume)},
                  {"common_tile", to_json(family.common_tile)},
                  {"scaled", scaled}};
      if (list_lattices) {
        Json ls = Json::array();
        for (std::size_t i = 0; i < family.lattices.size(); ++i) {
          Json entry = to_json(family.lattices[i]);
          entry["generator"] = to_json(family.generators[i]);
          ls.push_back(std::move(entry));
        }
        out.json["lattices"] = std::move(ls);
      }
      if (verify_samples > 0) {
        const auto v = lattice::verify_many_relations(family, static_cast<std::uint64_t>(verify_samples), seed);
        const auto pu = static_cast<std::uint64_t>(lp);
        const bool ok = v.contains_base_lattice && v.volumes_match && v.min_multiplicity == pu && v.max_multiplicity == pu;
        out.json["verification"] = {{"samples_per_lattice", v.samples_per_lattice},
                                    {"seed", seed},
                                    {"contains_base_lattice", v.contains_base_lattice},
                                    {"volumes_match", v.volumes_match},
                                    {"min_multiplicity", v.min_multiplicity},
                                    {"max_multiplicity", v.max_multiplicity},
                                    {"ok", ok}};
        out.failed = !ok;
      }
      return out;
    };
  });

  std::string basis_text;
  auto* ldual = lat_cmd->add_subcommand("dual", "Canonical form and dual of a lattice");
  ldual->add_option("--basis", basis_text, "Rows separated by ';', e.g. \"2,0;0,1/2\"")->required();
  ldual->callback([&] {
    handler = [&] {
      const auto l = lattice::make_lattice(parse_matrix(basis_text));
      Output out;
      out.json = {{"lattice", to_json(l)}, {"dual", to_json(lattice::dual(l))}};
      return out;
    };
  });

  std::string a_text;
  std::string b_text;
  auto* lmj = lat_cmd->add_subcommand("meet-join", "Sum and intersection of two lattices");
  lmj->add_option("--a", a_text, "Basis rows of the first lattice")->required();
  lmj->add_option("--b", b_text, "Basis rows of the second lattice")->required();
  lmj->callback([&] {
    handler = [&] {
      const auto a = lattice::make_lattice(parse_matrix(a_text));
      const auto b = lattice::make_lattice(parse_matrix(b_text));
      const auto si = lattice::sum_and_intersection(a, b);
      Output out;
      out.json = {{"a", to_json(a)},
                  {"b", to_json(b)},
                  {"sum", to_json(si.sum)},
                  {"intersection", to_json(si.intersection)},
                  {"volume_identity", si.sum.volume() * si.intersection.volume() == a.volume() * b.volume()}};
      return out;
    };
  });

  // ---- density ------------------------------------------------------------
  auto* den_cmd = app.add_subcommand("density", "Integers with a divisor in (N, 2N]");
  den_cmd->require_subcommand(1);
  std::int64_t dN = 0;
  std::int64_t dX = 1'000'000;
  bool json_flag = false;
  auto* dmul = den_cmd->add_subcommand("multiples", "Exact density, sieve count and reference value");
  dmul->add_option("-N", dN, "N")->required();
  dmul->add_option("-X", dX, "Window [1, X]");
  dmul->add_flag("--json", json_flag, "JSON output (the default)");
  dmul->callback([&] {
    handler = [&] {
      Output out;
      out.json = to_json(density::density_report(dN, dX));
      return out;
    };
  });

  auto* duw = den_cmd->add_subcommand("union-window", "Count in [1, 2N^2] by two methods");
  duw->add_option("-N", dN, "N")->required();
  duw->callback([&] {
    handler = [&] {
      const auto sieve = density::union_count_window(dN);
      Output out;
      out.json = {{"N", dN}, {"window", 2 * dN * dN}, {"count", sieve}};
      if (dN <= density::kMaxInclusionExclusionN) {
        const auto ie = density::multiples_count_inclusion_exclusion(dN, 2 * dN * dN);
        out.json["inclusion_exclusion"] = ie;
        out.json["agree"] = ie == sieve;
        out.failed = ie != sieve;
      } else {
        out.json["inclusion_exclusion"] = nullptr;
      }
      return out;
    };
  });

  // ---- repro --------------------------------------------------------------
  auto* repro_cmd = app.add_subcommand("repro", "Acceptance report");
  repro_cmd->require_subcommand(1);
  std::string out_dir = "repro-report";
  std::string only_text;
  auto* rall = repro_cmd->add_subcommand("all", "Run every acceptance check and write a report directory");
  rall->add_option("--out", out_dir, "Report directory");
  rall->add_option("--only", only_text, "Comma-separated criterion numbers");
  rall->callback([&] {
    handler = [&] {
      repro::Options opts;
      opts.threads = threads_arg > 0 ? static_cast<unsigned>(threads_arg) : default_threads();
      if (!only_text.empty()) {
        for (auto id : parse_ints(only_text)) opts.only.push_back(static_cast<int>(id));
      }
      const auto results = repro::run_all(opts);
      repro::write_report(out_dir, results);
      Output out;
      Json criteria = Json::array();
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        criteria.push_back({{"id", r.id}, {"passed", r.passed}, {"title", r.title}, {"detail", r.detail}});
      }
      out.json = {{"out", out_dir}, {"passed", all}, {"criteria", criteria}};
      out.failed = !all;
      return out;
    };
  });

  // ---- dispatch -----------------------------------------------------------
  try {
    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    app.exit(e, out, err);
    result.output = out.str();
    result.error = err.str();
    result.exit_code = e.get_exit_code() == 0 ? kExitOk : kExitValidation;
    return result;
  } catch (const ValidationError& e) {
    result.error = std::string("error: ") + e.what() + '\n';
    result.exit_code = kExitValidation;
    return result;
  }

  for (const auto* sub : app.get_subcommands()) {
    result.subcommand = sub->get_name();
    for (const auto* leaf : sub->get_subcommands()) result.subcommand += ' ' + leaf->get_name();
  }

  try {
    if (threads_arg < 0) throw ValidationError("--threads must be positive");
    if (!handler) throw ValidationError("no subcommand given");
    const bool table_default_csv = result.subcommand == "copula table" && !table_json && !pretty_flag;
    Output out = handler();
    if (csv_flag || table_default_csv) {
      if (!out.csv) throw ValidationError("`" + result.subcommand + "` has no CSV form");
      result.output = *out.csv;
    } else if (pretty_flag) {
      result.output = pretty(out.json, 0);
    } else {
      result.output = out.json.dump() + '\n';
    }
    result.exit_code = out.failed ? kExitFailure : kExitOk;
  } catch (const CapExceeded& e) {
    result.error = std::string("cap exceeded: ") + e.what() + '\n';
    result.exit_code = kExitCap;
  } catch (const ValidationError& e) {
    result.error = std::string("error: ") + e.what() + '\n';
    result.exit_code = kExitValidation;
  } catch (const std::exception& e) {
    result.error = std::string("internal error: ") + e.what() + '\n';
    result.exit_code = kExitFailure;
  }
  return result;
}

}  // namespace steintile::cli
