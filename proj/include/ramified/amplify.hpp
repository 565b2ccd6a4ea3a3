#pragma once

/**
 * @file amplify.hpp
 * @brief Reidemeister-Schreier data and cyclic unbranched extensions.
 *
 * Words are sequences of nonzero integers: +i is the i-th generator
 * (1-based), -i its inverse. Slot words use the first k-1 slots of the base
 * constellation; the last slot is (x1 ... x_{k-1})^-1.
 */

#include <cstdint>
#include <vector>

#include "ramified/covering.hpp"

namespace ramified {

using Word = std::vector<int>;

struct SchreierGenerator {
  Point sheet;       // edge source
  std::size_t slot;  // 0-based slot index < k-1
};

struct PunctureWord {
  std::size_t slot;
  Point entry;  // least point of the cycle
  std::size_t length;
  Word word;  // in Schreier generators
};

struct SchreierData {
  Constellation base;
  /// transversal[x]: shortlex-least slot word carrying sheet 0 to sheet x.
  std::vector<Word> transversal;
  std::vector<SchreierGenerator> generators;
  /// generators[i] as a slot word t_x . x_s . t_{x.s}^-1
  std::vector<Word> generator_words;
  std::vector<PunctureWord> punctures;
};

/// Throws GenusTooSmall when genus_rh(c) < 1.
SchreierData schreier_data(const Constellation &c);

/// Throws GenusTooSmall, InvalidInput for d < 2, NoSurjection.
Constellation cyclic_unbranched_extension(const Constellation &c, std::uint64_t d);

} // namespace ramified
