#include "ramified/json_io.hpp"

#include <map>
#include <unordered_map>

#include "ramified/error.hpp"

namespace ramified {

namespace {

[[noreturn]] void malformed(const std::string &what)
{
  throw Error(ErrorKind::InvalidInput, "malformed JSON: " + what);
}

const Json &field(const Json &j, const char *name)
{
  if (!j.is_object() || !j.contains(name))
    malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

} // namespace

Json to_json(const Permutation &p)
{
  return Json(p.images());
}

Json to_json(const Constellation &c)
{
  Json slots = Json::array();
  for (const auto &slot : c.slots())
    slots.push_back({{"point", slot.point}, {"perm", to_json(slot.perm)}});
  return {{"degree", c.degree()}, {"slots", slots}};
}

Json to_json(const BranchingDatum &d)
{
  Json out = Json::array();
  for (const auto &e : d.entries())
    out.push_back({{"point", e.point}, {"order", e.order}});
  return out;
}

Json to_json(Complex z)
{
  return {{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const std::vector<Complex> &values)
{
  Json out = Json::array();
  for (const Complex &z : values)
    out.push_back(to_json(z));
  return out;
}

namespace {

using NodeId = const RadicalExpr::Node *;

void count_refs(const RadicalExpr &e, std::unordered_map<NodeId, int> &refs)
{
  if (refs[e.id()]++ > 0)
    return;
  switch (e.kind()) {
  case RadicalKind::Add:
  case RadicalKind::Sub:
  case RadicalKind::Mul:
  case RadicalKind::Div:
    count_refs(e.lhs(), refs);
    count_refs(e.rhs(), refs);
    break;
  case RadicalKind::Neg:
  case RadicalKind::Root:
    count_refs(e.lhs(), refs);
    break;
  default:
    break;
  }
}

Json encode(const RadicalExpr &e, const std::unordered_map<NodeId, int> &refs,
            std::unordered_map<NodeId, int> &ids)
{
  if (auto it = ids.find(e.id()); it != ids.end())
    return {{"ref", it->second}};
  Json out;
  switch (e.kind()) {
  case RadicalKind::Rational: out = {{"op", "rational"}, {"value", to_string(e.value())}}; break;
  case RadicalKind::ImaginaryUnit: out = {{"op", "i"}}; break;
  case RadicalKind::Variable: out = {{"op", "w"}}; break;
  case RadicalKind::Neg: out = {{"op", "neg"}, {"arg", encode(e.lhs(), refs, ids)}}; break;
  case RadicalKind::Root:
    out = {{"op", "root"}, {"index", e.index()}, {"arg", encode(e.lhs(), refs, ids)}};
    break;
  default: {
    static const std::map<RadicalKind, const char *> names{{RadicalKind::Add, "add"},
                                                           {RadicalKind::Sub, "sub"},
                                                           {RadicalKind::Mul, "mul"},
                                                           {RadicalKind::Div, "div"}};
    Json args = Json::array();
    args.push_back(encode(e.lhs(), refs, ids));
    args.push_back(encode(e.rhs(), refs, ids));
    out = {{"op", names.at(e.kind())}, {"args", args}};
  }
  }
  if (refs.at(e.id()) > 1) {
    const int id = static_cast<int>(ids.size());
    ids[e.id()] = id;
    out["id"] = id;
  }
  return out;
}

RadicalExpr decode(const Json &j, std::map<int, RadicalExpr> &ids)
{
  if (j.is_object() && j.contains("ref")) {
    auto it = ids.find(j.at("ref").get<int>());
    if (it == ids.end())
      malformed("unknown radical reference");
    return it->second;
  }
  const std::string op = field(j, "op").get<std::string>();
  RadicalExpr out;
  if (op == "rational")
    out = RadicalExpr::constant(parse_rational(field(j, "value").get<std::string>()));
  else if (op == "i")
    out = RadicalExpr::imaginary_unit();
  else if (op == "w")
    out = RadicalExpr::variable();
  else if (op == "neg")
    out = -decode(field(j, "arg"), ids);
  else if (op == "root")
    out = RadicalExpr::root(field(j, "index").get<unsigned>(), decode(field(j, "arg"), ids));
  else {
    const Json &args = field(j, "args");
    if (!args.is_array() || args.size() != 2)
      malformed("binary radical node needs two args");
    const RadicalExpr a = decode(args[0], ids);
    const RadicalExpr b = decode(args[1], ids);
    if (op == "add")
      out = a + b;
    else if (op == "sub")
      out = a - b;
    else if (op == "mul")
      out = a * b;
    else if (op == "div")
      out = a / b;
    else
      malformed("unknown radical op '" + op + "'");
  }
  if (j.contains("id"))
    ids[j.at("id").get<int>()] = out;
  return out;
}

} // namespace

Json to_json(const RadicalExpr &e)
{
  std::unordered_map<NodeId, int> refs, ids;
  count_refs(e, refs);
  return encode(e, refs, ids);
}

RadicalExpr radical_from_json(const Json &j)
{
  std::map<int, RadicalExpr> ids;
  try {
    return decode(j, ids);
  } catch (const nlohmann::json::exception &ex) {
    malformed(ex.what());
  }
}

Permutation permutation_from_json(const Json &j)
{
  if (!j.is_array())
    malformed("permutation must be an array");
  std::vector<Point> images;
  for (const auto &x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw Error(ErrorKind::InvalidPermutation, "images must be non-negative integers");
    images.push_back(x.get<Point>());
  }
  return Permutation(std::move(images));
}

Constellation constellation_from_json(const Json &j)
{
  try {
    const std::size_t degree = field(j, "degree").get<std::size_t>();
    std::vector<Slot> slots;
    const Json &arr = field(j, "slots");
    if (!arr.is_array())
      malformed("slots must be an array");
    for (const auto &s : arr)
      slots.push_back({field(s, "point").get<std::string>(), permutation_from_json(field(s, "perm"))});
    return Constellation(degree, std::move(slots));
  } catch (const nlohmann::json::exception &ex) {
    malformed(ex.what());
  }
}

BranchingDatum datum_from_json(const Json &j)
{
  try {
    const Json &arr = j.is_object() ? field(j, "datum") : j;
    if (!arr.is_array())
      malformed("datum must be an array");
    std::vector<DatumEntry> entries;
    for (const auto &e : arr)
      entries.push_back({field(e, "point").get<std::string>(), field(e, "order").get<std::uint64_t>()});
    return BranchingDatum(std::move(entries));
  } catch (const nlohmann::json::exception &ex) {
    malformed(ex.what());
  }
}

Json polynomial_to_json(const ExactPolynomial &p)
{
  Json out = Json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    out.push_back(to_string(*it));
  if (p.is_zero())
    out.push_back("0");
  return out;
}

} // namespace ramified
