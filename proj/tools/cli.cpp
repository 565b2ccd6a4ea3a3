#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ramified/amplify.hpp"
#include "ramified/classify.hpp"
#include "ramified/decompose.hpp"
#include "ramified/error.hpp"
#include "ramified/exemplars.hpp"
#include "ramified/galois.hpp"
#include "ramified/json_io.hpp"
#include "ramified/radicals.hpp"

namespace ramified::cli {

namespace {

Json read_json(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception &ex) {
    throw Error(ErrorKind::InvalidInput, path + ": " + ex.what());
  }
}

std::vector<std::string> split_list(const std::string &text)
{
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    parts.push_back(item);
  return parts;
}

ExactPolynomial parse_coeffs(const std::string &text)
{
  std::vector<Rational> coeffs;
  for (const auto &part : split_list(text))
    coeffs.push_back(parse_rational(part));
  if (coeffs.empty())
    throw Error(ErrorKind::InvalidInput, "no coefficients given");
  if (coeffs.front() == 0)
    throw Error(ErrorKind::DegenerateLeading, "leading coefficient is zero");
  return ExactPolynomial::from_high_to_low(coeffs);
}

std::vector<std::uint64_t> parse_orders(const std::string &text)
{
  std::vector<std::uint64_t> orders;
  for (const auto &part : split_list(text)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(part, &used);
      if (used != part.size() || v < 0)
        throw std::invalid_argument(part);
      orders.push_back(static_cast<std::uint64_t>(v));
    } catch (const std::logic_error &) {
      throw Error(ErrorKind::InvalidInput, "bad order '" + part + "'");
    }
  }
  return orders;
}

std::size_t group_cap()
{
  const char *env = std::getenv("RAMIFIED_CAP");
  if (env == nullptr || *env == '\0')
    return kDefaultGroupCap;
  char *end = nullptr;
  const unsigned long long cap = std::strtoull(env, &end, 10);
  if (*end != '\0' || cap == 0)
    throw Error(ErrorKind::InvalidInput, "RAMIFIED_CAP must be a positive integer");
  return static_cast<std::size_t>(cap);
}

Json class_json(const DatumClass &c)
{
  return {{"tag", tag_name(c.tag)},
          {"solvable_guarantee", c.solvable_guarantee},
          {"quintic_resolvent", c.quintic_resolvent},
          {"genus_bound", genus_bound_name(c.genus_bound)},
          {"param", c.param}};
}

Json factor_json(const FactorClass &f)
{
  Json out{{"tag", factor_tag_name(f.tag)},
           {"degree", f.factor.degree()},
           {"factor", polynomial_to_json(f.factor)}};
  if (f.datum)
    out["datum"] = to_json(*f.datum);
  if (f.power) {
    const auto &w = *f.power;
    out["witness"] = {{"kind", "power"},
                      {"n", w.n},
                      {"scale", to_string(w.scale)},
                      {"center", to_string(w.center)},
                      {"shift", to_string(w.shift)},
                      {"outer", {{"alpha", to_string(w.scale)}, {"beta", to_string(w.shift)}}},
                      {"inner", {{"alpha", "1"}, {"beta", to_string(-w.center)}}}};
  }
  if (f.chebyshev) {
    const auto &w = *f.chebyshev;
    out["witness"] = {{"kind", "chebyshev"},
                      {"n", w.n},
                      {"scale", to_string(w.scale)},
                      {"center", to_string(w.center)},
                      {"inner_scale_squared", to_string(w.inner_scale_squared)},
                      {"shift", to_string(w.shift)}};
  }
  return out;
}

void print_text(const Json &j, std::ostream &out, const std::string &indent = "")
{
  if (j.is_object()) {
    for (const auto &[key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_object())) {
        out << indent << key << ":\n";
        print_text(value, out, indent + "  ");
      } else {
        out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto &item : j) {
      if (item.is_object()) {
        out << indent << "-\n";
        print_text(item, out, indent + "  ");
      } else {
        out << indent << "- " << item.dump() << "\n";
      }
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Options {
  bool text = false;
  std::string input, left, right, orders, family, coeffs, w = "0", v = "0";
  std::uint64_t param = 1, d = 2, n = 2, nmax = 12;
  int genus = 0;
  bool radical = false;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Branched coverings, monodromy and radical inversion", "ramified"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--text", o.text, "Human-readable output instead of JSON");

  auto input_option = [&](CLI::App *sub, std::string &target, const std::string &name,
                          const std::string &help) {
    sub->add_option(name, target, help)->required()->check(CLI::ExistingFile);
  };

  auto *datum = app.add_subcommand("datum", "Branching datum and passport of a constellation");
  input_option(datum, o.input, "--input", "Constellation JSON file");
  auto *genus = app.add_subcommand("genus", "Riemann-Hurwitz genus of a constellation");
  input_option(genus, o.input, "--input", "Constellation JSON file");
  auto *classify = app.add_subcommand("classify", "Classify a branching datum");
  auto *orders_opt = classify->add_option("--orders", o.orders, "Comma-separated orders");
  auto *datum_opt = classify->add_option("--input", o.input, "Datum or constellation JSON file")
                      ->check(CLI::ExistingFile);
  orders_opt->excludes(datum_opt);
  auto *closure = app.add_subcommand("closure", "Galois closure of a constellation");
  input_option(closure, o.input, "--input", "Constellation JSON file");
  auto *fprod = app.add_subcommand("fprod", "Components of a fibered product");
  input_option(fprod, o.left, "--left", "First constellation JSON file");
  input_option(fprod, o.right, "--right", "Second constellation JSON file");
  auto *dominates_cmd = app.add_subcommand("dominates", "Whether --left factors through --right");
  input_option(dominates_cmd, o.left, "--left", "Covering constellation JSON file");
  input_option(dominates_cmd, o.right, "--right", "Covered constellation JSON file");
  auto *exemplar_cmd = app.add_subcommand("exemplar", "Minimal Galois constellation of a family");
  exemplar_cmd->add_option("--family", o.family, "Family tag, e.g. tetra233")->required();
  exemplar_cmd->add_option("--param", o.param, "n for power/dihedral, m for torus families");
  auto *enumerate = app.add_subcommand("enumerate", "Galois branching data of a given genus");
  enumerate->add_option("--genus", o.genus, "Target genus")->required()->check(CLI::Range(0, 1));
  enumerate->add_option("--nmax", o.nmax, "Largest degree")->check(CLI::Range(2, 100000));
  auto *amplify = app.add_subcommand("amplify", "Cyclic unbranched extension");
  input_option(amplify, o.input, "--input", "Constellation JSON file");
  amplify->add_option("--d", o.d, "Order of the cyclic group")->check(CLI::Range(2, 1000));
  auto *invert = app.add_subcommand("invert", "Radical inverse of z^n or P_n");
  invert->add_option("--family", o.family, "power or chebyshev")
    ->required()
    ->check(CLI::IsMember({"power", "chebyshev"}));
  invert->add_option("--n", o.n, "Degree")->check(CLI::Range(1, 64));
  invert->add_option("--w", o.w, "Rational target value");
  auto *cubic = app.add_subcommand("solve-cubic", "Cubic by critical values");
  cubic->add_option("--coeffs", o.coeffs, "a,b,c,d (high to low)")->required();
  cubic->add_option("--v", o.v, "Rational target value");
  auto *quartic = app.add_subcommand("solve-quartic", "Quartic by a pencil of conics");
  quartic->add_option("--coeffs", o.coeffs, "a,b,c,d,e (high to low)")->required();
  quartic->add_flag("--radical", o.radical, "Include the radical expression");
  auto *decompose = app.add_subcommand("decompose", "Decomposition into indecomposables");
  decompose->add_option("--coeffs", o.coeffs, "Coefficients, high to low")->required();
  auto *ritt = app.add_subcommand("ritt", "Invertibility in radicals");
  ritt->add_option("--coeffs", o.coeffs, "Coefficients, high to low")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const std::size_t cap = group_cap();
    Json result;
    bool lines = false;
    if (datum->parsed()) {
      const DatumReport report = branching_datum(constellation_from_json(read_json(o.input)));
      result = {{"datum", to_json(report.datum)}, {"passport", report.passport}};
    } else if (genus->parsed()) {
      const Constellation c = constellation_from_json(read_json(o.input));
      result = {{"degree", c.degree()}, {"genus", genus_rh(c)}};
    } else if (classify->parsed()) {
      DatumClass cls;
      if (!o.orders.empty()) {
        cls = classify_datum(datum_from_orders(parse_orders(o.orders)));
      } else if (!o.input.empty()) {
        const Json j = read_json(o.input);
        cls = j.is_object() && j.contains("slots")
                ? classify_datum(branching_datum(constellation_from_json(j)).datum)
                : classify_datum(datum_from_json(j));
      } else {
        throw CLI::RequiredError("--orders or --input");
      }
      result = class_json(cls);
    } else if (closure->parsed()) {
      result = to_json(galois_closure(constellation_from_json(read_json(o.input)), cap));
    } else if (fprod->parsed()) {
      const auto comps = fibered_product(constellation_from_json(read_json(o.left)),
                                         constellation_from_json(read_json(o.right)));
      Json arr = Json::array();
      for (const auto &comp : comps) {
        Json pairs = Json::array();
        for (const auto &[i, j] : comp.points)
          pairs.push_back({i, j});
        arr.push_back({{"constellation", to_json(comp.cover)}, {"points", pairs}});
      }
      result = {{"components", arr}};
    } else if (dominates_cmd->parsed()) {
      result = {{"dominates", dominates(constellation_from_json(read_json(o.left)),
                                        constellation_from_json(read_json(o.right)))}};
    } else if (exemplar_cmd->parsed()) {
      const auto tag = parse_tag(o.family);
      if (!tag)
        throw Error(ErrorKind::InvalidInput, "unknown family '" + o.family + "'");
      result = to_json(exemplar({*tag, o.param}));
    } else if (enumerate->parsed()) {
      lines = true;
      result = Json::array();
      for (const auto &g : enumerate_galois_data(o.genus, o.nmax))
        result.push_back({{"orders", g.orders}, {"n", g.n}});
    } else if (amplify->parsed()) {
      const Constellation base = constellation_from_json(read_json(o.input));
      const Constellation ext = cyclic_unbranched_extension(base, o.d);
      auto order_or_null = [&](const Constellation &c) -> Json {
        try {
          return monodromy_group(c, cap).order;
        } catch (const Error &e) {
          if (e.kind() != ErrorKind::CapExceeded)
            throw;
          return nullptr;
        }
      };
      result = {{"constellation", to_json(ext)},
                {"report",
                 {{"d", o.d},
                  {"degree_before", base.degree()},
                  {"degree_after", ext.degree()},
                  {"genus_before", genus_rh(base)},
                  {"genus_after", genus_rh(ext)},
                  {"monodromy_order_before", order_or_null(base)},
                  {"monodromy_order_after", order_or_null(ext)}}}};
    } else if (invert->parsed()) {
      const RadicalExpr w = RadicalExpr::constant(parse_rational(o.w));
      const unsigned n = static_cast<unsigned>(o.n);
      const RadicalExpr e = o.family == "power" ? invert_power(n, w) : invert_chebyshev(n, w);
      result = {{"radical", to_json(e)}, {"values", to_json(eval_multi(e).values)}};
    } else if (cubic->parsed()) {
      const auto sol = solve_cubic(parse_coeffs(o.coeffs), parse_rational(o.v));
      result = {{"roots", to_json(sol.roots)},
                {"cube_case", sol.cube_case},
                {"radical", to_json(sol.radical)}};
    } else if (quartic->parsed()) {
      const auto sol = solve_quartic_pencil(parse_coeffs(o.coeffs));
      result = {{"roots", to_json(sol.roots)},
                {"lambdas", to_json(sol.lambdas)},
                {"degenerate", sol.degenerate}};
      if (o.radical)
        result["radical"] = to_json(sol.radical);
    } else if (decompose->parsed()) {
      const ExactPolynomial p = parse_coeffs(o.coeffs);
      Json factors = Json::array();
      for (const auto &f : decompose_poly(p))
        factors.push_back(factor_json(classify_factor(f)));
      result = {{"factors", factors}};
    } else if (ritt->parsed()) {
      const RittVerdict v = ritt_verdict(parse_coeffs(o.coeffs));
      Json factors = Json::array();
      for (const auto &f : v.factors)
        factors.push_back(factor_json(f));
      result = {{"invertible", v.invertible}, {"factors", factors}};
      if (v.inverse)
        result["inverse"] = to_json(*v.inverse);
    }

    if (o.text) {
      print_text(result, out);
    } else if (lines) {
      for (const auto &record : result)
        out << record.dump() << "\n";
    } else {
      out << result.dump() << "\n";
    }
    return 0;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error &e) {
    err << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

} // namespace ramified::cli
