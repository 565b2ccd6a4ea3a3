#pragma once

/**
 * @file classify.hpp
 * @brief The nine privileged branching data and prime-degree checks.
 *
 * Orders use 0 to encode an infinite order (a translation z -> z + b in the
 * affine picture), both in memory and on the wire.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramified/covering.hpp"
#include "ramified/perm.hpp"

namespace ramified {

inline constexpr std::uint64_t kInfiniteOrder = 0;

enum class DatumTag {
  PowerNN,
  Dihedral22N,
  Tetra233,
  Octa234,
  Icosa235,
  Torus236,
  Torus333,
  Torus244,
  Torus2222,
  Other,
};

enum class GenusBound { Zero, One, Unbounded };

std::string_view tag_name(DatumTag tag) noexcept;
/// Case-insensitive; accepts e.g. "tetra233" and "Tetra233".
std::optional<DatumTag> parse_tag(std::string_view name);
std::string_view genus_bound_name(GenusBound bound) noexcept;

struct DatumClass {
  DatumTag tag = DatumTag::Other;
  bool solvable_guarantee = false;
  /// Set for (2,3,5): inverses need a degree-5 equation instead of radicals.
  bool quintic_resolvent = false;
  GenusBound genus_bound = GenusBound::Unbounded;
  /// The n of (n,n) or (2,2,n); 0 for the other families.
  std::uint64_t param = 0;
};

/// Matches (n,n), then (2,2,n), then the triangle types, then (2,2,2,2).
DatumClass classify_orders(std::vector<std::uint64_t> orders);
DatumClass classify_datum(const BranchingDatum &d);

struct GaloisDatum {
  std::vector<std::uint64_t> orders;  // ascending
  std::uint64_t n = 0;

  friend bool operator==(const GaloisDatum &, const GaloisDatum &) = default;
};

/// Every order multiset (entries >= 2 dividing n) whose Galois covering of
/// degree n over the sphere has the target genus, for 1 <= n <= n_max.
/// Degrees are processed in parallel; output is ordered by n, then orders.
std::vector<GaloisDatum> enumerate_galois_data(int target_genus, std::uint64_t n_max);

/// Serial reference implementation of enumerate_galois_data.
std::vector<GaloisDatum> enumerate_galois_data_serial(int target_genus, std::uint64_t n_max);

/// All nondecreasing solutions of sum 1/n_i = k - 2 over {2, 3, ...} and
/// infinity (encoded 0, placed last).
std::vector<std::vector<std::uint64_t>> ritt_equation_solutions();

/// Number of cycles of z -> a z + b on Z/p when ord(a) = a_order (0 means a = 1).
std::uint64_t preimage_count(std::uint64_t a_order, std::uint64_t p);

struct AffineEmbedding {
  std::vector<std::uint64_t> relabel;  // point -> residue mod p
  /// (a, b) of z -> a z + b for each generator under the relabeling.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> generator_forms;
};

/// Relabeling of a solvable transitive group of prime degree p under which
/// every element is affine on Z/p. Throws NotPrimeDegree, NotTransitive or
/// NotSolvable when the hypotheses fail.
std::optional<AffineEmbedding> affine_embedding(const GroupTable &g);

bool is_prime(std::uint64_t n) noexcept;

} // namespace ramified
