#pragma once

/**
 * @file exemplars.hpp
 * @brief Minimal Galois constellations for the nine privileged data.
 *
 * Each family is the regular action of an explicit group on itself:
 *
 *  - PowerNN(n): Z/n with slots (1, -1).
 *  - Dihedral22N(n): z -> +-z + k on Z/n, slots (z -> -z, z -> 1 - z, z -> z - 1).
 *  - Tetra233, Octa234, Icosa235: A4, S4, A5 from a generator search in the
 *    natural action, regularized.
 *  - Torus*: z -> a z + b with a a power of a unit of order k acting on
 *    (Z/m)^2 and b in (Z/m)^2. Units: Eisenstein order 3 is (0,-1;1,-1),
 *    order 6 its negative, Gaussian order 4 is (0,-1;1,0), order 2 is -I.
 */

#include <cstdint>

#include "ramified/classify.hpp"
#include "ramified/covering.hpp"

namespace ramified {

struct ExemplarSpec {
  DatumTag family = DatumTag::PowerNN;
  /// n for PowerNN / Dihedral22N, m for the torus families, unused otherwise.
  std::uint64_t param = 1;
};

/// Throws UnrealizableParam for Other, n < 2, m < 1, or when no generating
/// pair exists.
Constellation exemplar(const ExemplarSpec &spec);

/// Expected order of the monodromy group (the exemplar's degree).
std::uint64_t exemplar_group_order(const ExemplarSpec &spec);

/// Multiplier order k for torus families, 0 otherwise.
std::uint64_t torus_multiplier_order(DatumTag family) noexcept;

} // namespace ramified
