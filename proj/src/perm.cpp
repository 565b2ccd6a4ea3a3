#include "ramified/perm.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "ramified/error.hpp"

namespace ramified {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  if (images_.empty())
    throw Error(ErrorKind::InvalidPermutation, "permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::InvalidPermutation, "images are not a bijection of 0..n-1");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> touched(degree, false);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree || touched[from])
        throw Error(ErrorKind::InvalidPermutation, "cycles are not disjoint or out of range");
      touched[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  std::size_t seed = p.degree();
  for (Point x : p.images())
    seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

Permutation compose(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "cannot compose permutations of degree " + std::to_string(p.degree()) +
                  " and " + std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q[p[static_cast<Point>(i)]];
  return Permutation(std::move(images));
}

Permutation product(std::span<const Permutation> perms)
{
  if (perms.empty())
    throw Error(ErrorKind::InvalidInput, "product of an empty list");
  Permutation result = perms.front();
  for (std::size_t i = 1; i < perms.size(); ++i)
    result = compose(result, perms[i]);
  return result;
}

Permutation commutator(const Permutation &p, const Permutation &q)
{
  return compose(compose(p.inverse(), q.inverse()), compose(p, q));
}

std::vector<std::vector<Point>> cycles(const Permutation &p)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::size_t cycle_count(const Permutation &p)
{
  std::size_t count = 0;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    ++count;
    for (Point x = start; !seen[x]; x = p[x])
      seen[x] = true;
  }
  return count;
}

CycleData cycle_data(const Permutation &p)
{
  CycleData data;
  for (const auto &cycle : cycles(p)) {
    data.cycle_type.push_back(cycle.size());
    data.order = std::lcm(data.order, static_cast<std::uint64_t>(cycle.size()));
  }
  std::sort(data.cycle_type.begin(), data.cycle_type.end(), std::greater<>());
  return data;
}

std::size_t GroupTable::index_of(const Permutation &p) const
{
  auto it = index.find(p);
  if (it == index.end())
    throw Error(ErrorKind::InvalidInput, "permutation is not an element of the group");
  return it->second;
}

std::vector<Point> orbit(std::size_t degree, std::span<const Permutation> gens, Point start)
{
  std::vector<bool> seen(degree, false);
  std::vector<Point> result{start};
  seen[start] = true;
  for (std::size_t head = 0; head < result.size(); ++head) {
    for (const auto &g : gens) {
      Point y = g[result[head]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  return result;
}

bool is_transitive(std::size_t degree, std::span<const Permutation> gens)
{
  return orbit(degree, gens, 0).size() == degree;
}

namespace {

void check_generators(std::size_t degree, std::span<const Permutation> generators)
{
  if (degree == 0)
    throw Error(ErrorKind::InvalidInput, "group degree must be at least 1");
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch, "generator degree differs from group degree");
}

GroupTable start_table(std::size_t degree, std::span<const Permutation> generators)
{
  GroupTable table;
  table.degree = degree;
  table.generators.assign(generators.begin(), generators.end());
  table.elements.push_back(Permutation::identity(degree));
  table.index.emplace(table.elements.front(), 0);
  return table;
}

void finish_table(GroupTable &table)
{
  table.order = table.elements.size();
  table.transitive = is_transitive(table.degree, table.generators);
}

[[noreturn]] void cap_exceeded(std::size_t cap)
{
  throw Error(ErrorKind::CapExceeded,
              "group has more than " + std::to_string(cap) + " elements");
}

} // namespace

GroupTable generate_group_serial(std::size_t degree, std::span<const Permutation> generators,
                                 std::size_t cap)
{
  check_generators(degree, generators);
  GroupTable table = start_table(degree, generators);
  for (std::size_t head = 0; head < table.elements.size(); ++head) {
    for (const auto &g : generators) {
      Permutation next = compose(table.elements[head], g);
      if (table.index.contains(next))
        continue;
      if (table.elements.size() >= cap)
        cap_exceeded(cap);
      table.index.emplace(next, table.elements.size());
      table.elements.push_back(std::move(next));
    }
  }
  finish_table(table);
  return table;
}

GroupTable generate_group(std::size_t degree, std::span<const Permutation> generators,
                          std::size_t cap)
{
  check_generators(degree, generators);
  GroupTable table = start_table(degree, generators);
  if (generators.empty()) {
    finish_table(table);
    return table;
  }

  const std::size_t n_gens = generators.size();
  std::size_t level_begin = 0;
  while (level_begin < table.elements.size()) {
    const std::size_t level_end = table.elements.size();
    const std::size_t n_products = (level_end - level_begin) * n_gens;
    std::vector<std::vector<Point>> products(n_products);
    std::vector<char> known(n_products, 0);

    // The index is only read inside the parallel region.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n_products); ++k) {
      const auto &element = table.elements[level_begin + static_cast<std::size_t>(k) / n_gens];
      const auto &gen = generators[static_cast<std::size_t>(k) % n_gens];
      std::vector<Point> images(degree);
      for (std::size_t i = 0; i < degree; ++i)
        images[i] = gen[element[static_cast<Point>(i)]];
      Permutation candidate(std::move(images));
      known[k] = table.index.contains(candidate) ? 1 : 0;
      products[k] = candidate.images();
    }

    for (std::size_t k = 0; k < n_products; ++k) {
      if (known[k])
        continue;
      Permutation candidate(std::move(products[k]));
      if (table.index.contains(candidate))
        continue;
      if (table.elements.size() >= cap)
        cap_exceeded(cap);
      table.index.emplace(candidate, table.elements.size());
      table.elements.push_back(std::move(candidate));
    }
    level_begin = level_end;
  }
  finish_table(table);
  return table;
}

GroupTable derived_subgroup(const GroupTable &g, std::size_t cap)
{
  std::vector<Permutation> gens;
  for (const auto &x : g.generators)
    if (!x.is_identity())
      gens.push_back(x);

  std::vector<Permutation> derived_gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        derived_gens.push_back(std::move(c));
    }

  GroupTable derived = generate_group(g.degree, derived_gens, cap);
  // Normal closure: conjugate the generators of the derived group by the
  // generators of g until nothing new appears.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto &x : gens) {
      const Permutation x_inv = x.inverse();
      for (std::size_t k = 0; k < derived.generators.size() && !grew; ++k) {
        Permutation conj = compose(compose(x_inv, derived.generators[k]), x);
        if (!derived.contains(conj)) {
          derived_gens.push_back(std::move(conj));
          derived = generate_group(g.degree, derived_gens, cap);
          grew = true;
        }
      }
      if (grew)
        break;
    }
  }
  return derived;
}

bool is_solvable(const GroupTable &g)
{
  GroupTable current = g;
  while (current.order > 1) {
    GroupTable next = derived_subgroup(current, std::max(current.order, std::size_t{1}));
    if (next.order == current.order)
      return false;
    current = std::move(next);
  }
  return true;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  std::vector<std::size_t> parent;
};

} // namespace

BlockSystem minimal_block_system(std::size_t degree, std::span<const Permutation> gens,
                                 std::span<const Point> points)
{
  UnionFind uf(degree);
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  auto merge = [&](std::size_t a, std::size_t b) {
    a = uf.find(a);
    b = uf.find(b);
    if (a == b)
      return;
    if (b < a)
      std::swap(a, b);
    uf.parent[b] = a;
    queue.emplace_back(a, b);
  };

  for (std::size_t i = 1; i < points.size(); ++i)
    merge(points[0], points[i]);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [a, b] = queue[head];
    for (const auto &g : gens)
      merge(g[static_cast<Point>(a)], g[static_cast<Point>(b)]);
  }

  std::vector<std::vector<Point>> by_root(degree);
  for (std::size_t x = 0; x < degree; ++x)
    by_root[uf.find(x)].push_back(static_cast<Point>(x));
  BlockSystem system;
  for (auto &block : by_root)
    if (!block.empty())
      system.push_back(std::move(block));
  std::sort(system.begin(), system.end());
  return system;
}

std::vector<BlockSystem> block_systems(const GroupTable &g)
{
  return block_systems(g.degree, g.generators);
}

std::vector<BlockSystem> block_systems(std::size_t n, std::span<const Permutation> generators)
{
  if (!is_transitive(n, generators))
    throw Error(ErrorKind::NotTransitive, "block systems need a transitive group");

  // Every block containing 0 is the closure of the union of the minimal
  // blocks {0, i}; collect minimal blocks, then close under joins.
  std::set<std::vector<Point>> blocks;
  std::vector<std::vector<Point>> pending;
  for (Point i = 1; i < n; ++i) {
    const std::array<Point, 2> pair{0, i};
    BlockSystem sys = minimal_block_system(n, generators, pair);
    if (sys.size() > 1 && blocks.insert(sys.front()).second)
      pending.push_back(sys.front());
  }
  while (!pending.empty()) {
    std::vector<Point> fresh = std::move(pending.back());
    pending.pop_back();
    std::vector<std::vector<Point>> known(blocks.begin(), blocks.end());
    for (const auto &other : known) {
      std::vector<Point> joined;
      std::set_union(fresh.begin(), fresh.end(), other.begin(), other.end(),
                     std::back_inserter(joined));
      BlockSystem sys = minimal_block_system(n, generators, joined);
      if (sys.size() > 1 && blocks.insert(sys.front()).second)
        pending.push_back(sys.front());
    }
  }

  std::vector<BlockSystem> systems;
  for (const auto &block : blocks)
    systems.push_back(minimal_block_system(n, generators, block));
  std::stable_sort(systems.begin(), systems.end(), [](const auto &a, const auto &b) {
    return a.front().size() < b.front().size();
  });
  return systems;
}

} // namespace ramified
