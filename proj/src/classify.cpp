#include "ramified/classify.hpp"

#include <algorithm>
#include <cctype>

#include "ramified/error.hpp"

namespace ramified {

namespace {

struct TagInfo {
  DatumTag tag;
  std::string_view name;
};

constexpr TagInfo kTags[] = {
  {DatumTag::PowerNN, "PowerNN"},   {DatumTag::Dihedral22N, "Dihedral22N"},
  {DatumTag::Tetra233, "Tetra233"}, {DatumTag::Octa234, "Octa234"},
  {DatumTag::Icosa235, "Icosa235"}, {DatumTag::Torus236, "Torus236"},
  {DatumTag::Torus333, "Torus333"}, {DatumTag::Torus244, "Torus244"},
  {DatumTag::Torus2222, "Torus2222"}, {DatumTag::Other, "Other"},
};

bool iequals(std::string_view a, std::string_view b)
{
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

} // namespace

std::string_view tag_name(DatumTag tag) noexcept
{
  for (const auto &info : kTags)
    if (info.tag == tag)
      return info.name;
  return "Other";
}

std::optional<DatumTag> parse_tag(std::string_view name)
{
  for (const auto &info : kTags)
    if (iequals(info.name, name))
      return info.tag;
  return std::nullopt;
}

std::string_view genus_bound_name(GenusBound bound) noexcept
{
  switch (bound) {
  case GenusBound::Zero: return "0";
  case GenusBound::One: return "1";
  case GenusBound::Unbounded: return "unbounded";
  }
  return "unbounded";
}

DatumClass classify_orders(std::vector<std::uint64_t> orders)
{
  std::sort(orders.begin(), orders.end());
  using V = std::vector<std::uint64_t>;
  DatumClass result;
  auto set = [&](DatumTag tag, GenusBound bound, std::uint64_t param = 0) {
    result.tag = tag;
    result.genus_bound = bound;
    result.param = param;
    result.solvable_guarantee = tag != DatumTag::Icosa235 && tag != DatumTag::Other;
    result.quintic_resolvent = tag == DatumTag::Icosa235;
  };

  if (orders.size() == 2 && orders[0] == orders[1] && orders[0] >= 2)
    set(DatumTag::PowerNN, GenusBound::Zero, orders[0]);
  else if (orders.size() == 3 && orders[0] == 2 && orders[1] == 2)
    set(DatumTag::Dihedral22N, GenusBound::Zero, orders[2]);
  else if (orders == V{2, 3, 3})
    set(DatumTag::Tetra233, GenusBound::Zero);
  else if (orders == V{2, 3, 4})
    set(DatumTag::Octa234, GenusBound::Zero);
  else if (orders == V{2, 3, 5})
    set(DatumTag::Icosa235, GenusBound::Zero);
  else if (orders == V{2, 3, 6})
    set(DatumTag::Torus236, GenusBound::One);
  else if (orders == V{3, 3, 3})
    set(DatumTag::Torus333, GenusBound::One);
  else if (orders == V{2, 4, 4})
    set(DatumTag::Torus244, GenusBound::One);
  else if (orders == V{2, 2, 2, 2})
    set(DatumTag::Torus2222, GenusBound::One);
  else
    set(DatumTag::Other, GenusBound::Unbounded);
  return result;
}

DatumClass classify_datum(const BranchingDatum &d)
{
  return classify_orders(d.sorted_orders());
}

namespace {

// Appends every nondecreasing multiset of divisors (>= 2) of n with
// sum(n - n/b) == target, where target = 2n - 2 + 2g.
void enumerate_degree(std::uint64_t n, int genus, std::vector<GaloisDatum> &out)
{
  const long long target = 2 * static_cast<long long>(n) - 2 + 2 * genus;
  if (target <= 0)
    return;
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t b = 2; b <= n; ++b)
    if (n % b == 0)
      divisors.push_back(b);

  std::vector<std::uint64_t> current;
  auto recurse = [&](auto &&self, std::size_t first, long long sum) -> void {
    if (sum == target && !current.empty())
      out.push_back({current, n});
    for (std::size_t k = first; k < divisors.size(); ++k) {
      const long long term = static_cast<long long>(n - n / divisors[k]);
      if (sum + term > target)
        break;  // terms grow with b
      current.push_back(divisors[k]);
      self(self, k, sum + term);
      current.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

void check_genus(int target_genus)
{
  if (target_genus < 0)
    throw Error(ErrorKind::InvalidInput, "target genus must be non-negative");
}

} // namespace

std::vector<GaloisDatum> enumerate_galois_data_serial(int target_genus, std::uint64_t n_max)
{
  check_genus(target_genus);
  std::vector<GaloisDatum> out;
  for (std::uint64_t n = 1; n <= n_max; ++n)
    enumerate_degree(n, target_genus, out);
  return out;
}

std::vector<GaloisDatum> enumerate_galois_data(int target_genus, std::uint64_t n_max)
{
  check_genus(target_genus);
  std::vector<std::vector<GaloisDatum>> per_degree(n_max);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n_max); ++k)
    enumerate_degree(static_cast<std::uint64_t>(k) + 1, target_genus, per_degree[k]);
  std::vector<GaloisDatum> out;
  for (auto &chunk : per_degree)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  return out;
}

std::vector<std::vector<std::uint64_t>> ritt_equation_solutions()
{
  std::vector<std::vector<std::uint64_t>> solutions;
  // Each term is at most 1/2, so sum 1/n_i <= k/2 < k - 2 once k >= 5.
  for (std::uint64_t k = 2; k <= 4; ++k) {
    std::vector<std::uint64_t> current;
    auto recurse = [&](auto &&self, std::uint64_t min_order, Rational remaining) -> void {
      const std::uint64_t slots_left = k - current.size();
      if (slots_left == 0) {
        if (remaining == 0)
          solutions.push_back(current);
        return;
      }
      if (remaining < 0)
        return;
      if (remaining == 0) {
        // The rest are translations.
        auto done = current;
        done.resize(k, kInfiniteOrder);
        solutions.push_back(std::move(done));
        return;
      }
      // 1/n <= remaining <= slots_left / n
      mpz_class upper = mpz_class(static_cast<unsigned long>(slots_left) * remaining.get_den()) /
                        remaining.get_num();
      for (std::uint64_t order = std::max<std::uint64_t>(min_order, 2);
           order <= upper.get_ui(); ++order) {
        Rational term(1, static_cast<unsigned long>(order));
        if (term > remaining)
          continue;
        current.push_back(order);
        self(self, order, Rational(remaining - term));
        current.pop_back();
      }
    };
    recurse(recurse, 2, Rational(static_cast<long>(k) - 2));
  }
  return solutions;
}

std::uint64_t preimage_count(std::uint64_t a_order, std::uint64_t p)
{
  if (a_order == kInfiniteOrder)
    return 1;
  if (p < 2 || (p - 1) % a_order != 0)
    throw Error(ErrorKind::NonDivisor,
                "order " + std::to_string(a_order) + " does not divide p - 1 = " +
                  std::to_string(p == 0 ? 0 : p - 1));
  return 1 + (p - 1) / a_order;
}

bool is_prime(std::uint64_t n) noexcept
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::optional<AffineEmbedding> affine_embedding(const GroupTable &g)
{
  const std::uint64_t p = g.degree;
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrimeDegree, "degree " + std::to_string(p) + " is not prime");
  if (!g.transitive)
    throw Error(ErrorKind::NotTransitive, "group is not transitive");
  if (!is_solvable(g))
    throw Error(ErrorKind::NotSolvable, "group is not solvable");

  // A transitive group of prime degree contains a p-cycle; in a solvable one
  // it generates the unique minimal normal subgroup, so labelling its orbit
  // 0, 1, ..., p-1 turns it into z -> z + 1 and its normalizer into affine maps.
  const Permutation *cycle = nullptr;
  for (const auto &e : g.elements)
    if (cycle_data(e).order == p) {
      cycle = &e;
      break;
    }
  if (cycle == nullptr)
    return std::nullopt;

  AffineEmbedding embedding;
  embedding.relabel.assign(p, 0);
  Point x = 0;
  for (std::uint64_t k = 0; k < p; ++k, x = (*cycle)[x])
    embedding.relabel[x] = k;
  std::vector<Point> point_of(p);
  for (Point y = 0; y < p; ++y)
    point_of[embedding.relabel[y]] = y;

  for (const auto &gen : g.generators) {
    auto image = [&](std::uint64_t z) { return embedding.relabel[gen[point_of[z]]]; };
    const std::uint64_t b = image(0);
    const std::uint64_t a = (image(1) + p - b) % p;
    if (a == 0)
      return std::nullopt;
    for (std::uint64_t z = 0; z < p; ++z)
      if (image(z) != (a * z + b) % p)
        return std::nullopt;
    embedding.generator_forms.emplace_back(a, b);
  }
  return embedding;
}

} // namespace ramified
