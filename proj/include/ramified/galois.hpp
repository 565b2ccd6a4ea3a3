#pragma once

/**
 * @file galois.hpp
 * @brief Monodromy groups, Galois closures, fibered products and domination.
 */

#include <span>
#include <utility>
#include <vector>

#include "ramified/covering.hpp"
#include "ramified/perm.hpp"

namespace ramified {

GroupTable monodromy_group(const Constellation &c, std::size_t cap = kDefaultGroupCap);

/// Regular monodromy action: |monodromy group| == degree.
bool is_galois(const Constellation &c, std::size_t cap = kDefaultGroupCap);

/// Regular right-multiplication action of the group generated by the slot
/// permutations, indexed by generation order. The slot permutations need
/// not act transitively; their product must be the identity.
Constellation regular_constellation(const std::vector<Slot> &slots, std::size_t degree,
                                    std::size_t cap = kDefaultGroupCap);

/// Minimal Galois covering dominating c.
Constellation galois_closure(const Constellation &c, std::size_t cap = kDefaultGroupCap);

/// One irreducible component of a fibered product, with each point's
/// (sheet of first factor, sheet of second factor) pair.
struct FiberedComponent {
  Constellation cover;
  std::vector<std::pair<Point, Point>> points;
};

/// Orbits of the product action on sheet pairs, ordered by their least pair.
/// Labels are merged first (identity slots padded in).
std::vector<FiberedComponent> fibered_product(const Constellation &c1, const Constellation &c2);

/// True iff the projection of the component onto the second factor is
/// unbranched: every cycle of the component has the length of the cycle
/// it covers in target.
bool projects_unbranched(const FiberedComponent &component, const Constellation &target);

/// True iff some surjection phi of c1's sheets onto c2's sheets intertwines
/// every slot (c1 factors through c2).
bool dominates(const Constellation &c1, const Constellation &c2);

} // namespace ramified
