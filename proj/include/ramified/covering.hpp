#pragma once

/**
 * @file covering.hpp
 * @brief Constellations as combinatorial branched coverings of the sphere.
 *
 * A constellation of degree n is an ordered list of slots, one per branch
 * point, each carrying the monodromy permutation of the sheets around that
 * point. The left-to-right product of the slot permutations is the identity
 * and the slots act transitively (the covering surface is connected).
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramified/perm.hpp"
#include "ramified/rational.hpp"

namespace ramified {

struct Slot {
  std::string point;
  Permutation perm;

  friend bool operator==(const Slot &, const Slot &) = default;
};

class Constellation {
public:
  /// Throws InvalidConstellation unless every invariant holds.
  Constellation(std::size_t degree, std::vector<Slot> slots);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Slot> &slots() const noexcept { return slots_; }
  std::size_t size() const noexcept { return slots_.size(); }
  std::vector<std::string> labels() const;
  std::vector<Permutation> perms() const;

  friend bool operator==(const Constellation &, const Constellation &) = default;

private:
  std::size_t degree_;
  std::vector<Slot> slots_;
};

/// Reason a slot list fails to be a constellation, or nullopt when valid.
std::optional<std::string> constellation_defect(std::size_t degree,
                                                const std::vector<Slot> &slots);

struct DatumEntry {
  std::string point;
  std::uint64_t order = 0;

  friend bool operator==(const DatumEntry &, const DatumEntry &) = default;
};

/// Branch points with the lcm of local branching orders over each of them.
class BranchingDatum {
public:
  BranchingDatum() = default;
  /// Throws InvalidDatum on repeated labels or orders below 2.
  explicit BranchingDatum(std::vector<DatumEntry> entries);

  const std::vector<DatumEntry> &entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::optional<std::uint64_t> order_at(const std::string &point) const;
  /// Orders as an ascending multiset; labels dropped.
  std::vector<std::uint64_t> sorted_orders() const;

  friend bool operator==(const BranchingDatum &, const BranchingDatum &) = default;

private:
  std::vector<DatumEntry> entries_;
};

/// Builds a datum with labels p1, p2, ... from bare orders.
BranchingDatum datum_from_orders(std::span<const std::uint64_t> orders);

struct DatumReport {
  BranchingDatum datum;
  std::vector<std::vector<std::size_t>> passport;  // cycle type of every slot
};

/// Slot orders (omitting identity slots) together with the full passport.
DatumReport branching_datum(const Constellation &c);

/// Genus of the covering surface by Riemann-Hurwitz over the sphere.
long genus_rh(const Constellation &c);

/// Every local branching order over a listed point divides the listed order;
/// slots at unlisted points must be the identity.
bool is_subject_to(const Constellation &c, const BranchingDatum &d);

/// Genus 1 - (n/2)(2 - sum(1 - 1/b)) of a Galois covering of degree n with
/// common branching orders b over a sphere. Exact; integrality not enforced.
Rational galois_rh_genus(std::uint64_t n, std::span<const std::uint64_t> orders);

/// Simultaneous conjugation of every slot: sheet i is renamed relabel[i].
Constellation relabel_sheets(const Constellation &c, const Permutation &relabel);

/// Merge of two label sequences keeping each one's relative order. Throws
/// LabelMismatch when shared labels occur in conflicting orders.
std::vector<std::string> merge_labels(const std::vector<std::string> &a,
                                      const std::vector<std::string> &b);

/// Same covering over the given label sequence, identity slots inserted for
/// labels it does not carry. Throws LabelMismatch if c's labels are not a
/// subsequence of labels.
Constellation pad_to_labels(const Constellation &c, const std::vector<std::string> &labels);

} // namespace ramified
