#pragma once

/**
 * @file perm.hpp
 * @brief Permutations and fully enumerated finite permutation groups.
 *
 * Composition is left-to-right everywhere in the library: compose(p, q)
 * applies p first, then q, so compose(p, q)[i] == q[p[i]]. Constellation
 * products, coset actions and Galois closures all rely on this convention.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace ramified {

using Point = std::uint32_t;

class Permutation {
public:
  /// Validates that images is a bijection of {0, ..., n-1} with n >= 1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point> &images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

/// Apply p first, then q.
Permutation compose(const Permutation &p, const Permutation &q);

/// Left-to-right product of a non-empty list.
Permutation product(std::span<const Permutation> perms);

/// p^-1 q^-1 p q with the left-to-right convention.
Permutation commutator(const Permutation &p, const Permutation &q);

struct CycleData {
  std::vector<std::size_t> cycle_type;  // all cycle lengths, fixed points included, descending
  std::uint64_t order = 1;              // lcm of the cycle lengths
};

CycleData cycle_data(const Permutation &p);

/// Disjoint cycles including fixed points, each starting at its least point,
/// ordered by that point.
std::vector<std::vector<Point>> cycles(const Permutation &p);

/// Number of cycles, fixed points included.
std::size_t cycle_count(const Permutation &p);

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite permutation group with every element listed.
///
/// Elements are stored in breadth-first discovery order starting from the
/// identity; downstream code (Galois closures) indexes sheets by that order.
struct GroupTable {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::size_t order = 0;
  bool transitive = false;

  bool contains(const Permutation &p) const { return index.contains(p); }
  std::size_t index_of(const Permutation &p) const;

  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
};

/// Breadth-first closure of the generators. Throws CapExceeded once the
/// group would hold more than cap elements. Frontier products are computed
/// in parallel; element order matches generate_group_serial exactly.
GroupTable generate_group(std::size_t degree, std::span<const Permutation> generators,
                          std::size_t cap = kDefaultGroupCap);

/// Serial reference implementation of generate_group.
GroupTable generate_group_serial(std::size_t degree,
                                 std::span<const Permutation> generators,
                                 std::size_t cap = kDefaultGroupCap);

/// Orbit of a point under the group generated by gens.
std::vector<Point> orbit(std::size_t degree, std::span<const Permutation> gens, Point start);

bool is_transitive(std::size_t degree, std::span<const Permutation> gens);

/// Commutator subgroup as the normal closure of generator commutators.
GroupTable derived_subgroup(const GroupTable &g, std::size_t cap = kDefaultGroupCap);

/// True iff the derived series reaches the trivial group.
bool is_solvable(const GroupTable &g);

/// A partition of the points into blocks of equal size; blocks are sorted
/// internally and ordered by their least point.
using BlockSystem = std::vector<std::vector<Point>>;

/// Smallest block system in which the given points share a block.
BlockSystem minimal_block_system(std::size_t degree, std::span<const Permutation> gens,
                                 std::span<const Point> points);

/// All nontrivial block systems, ordered by increasing block size. An empty
/// result means the action is primitive. Throws NotTransitive.
std::vector<BlockSystem> block_systems(const GroupTable &g);

/// Same, working from generators alone (no group enumeration).
std::vector<BlockSystem> block_systems(std::size_t degree, std::span<const Permutation> generators);

} // namespace ramified
