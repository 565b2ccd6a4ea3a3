#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings.
 *
 *   permutation    [1, 0, 2]
 *   constellation  {"degree": n, "slots": [{"point": "p1", "perm": [...]}, ...]}
 *   datum          [{"point": "p1", "order": 2}, ...]
 *   complex        {"re": x, "im": y}
 *   radical        {"op": "root", "index": 3, "arg": {...}}; ops are rational
 *                  (with "value": "p/q"), i, w, add, sub, mul, div (with
 *                  "args": [l, r]), neg (with "arg"). A node reached more
 *                  than once carries "id" at its first occurrence and is
 *                  written as {"ref": id} afterwards.
 */

#include <json.hpp>

#include "ramified/covering.hpp"
#include "ramified/polynomial.hpp"
#include "ramified/radical.hpp"

namespace ramified {

using Json = nlohmann::json;

Json to_json(const Permutation &p);
Json to_json(const Constellation &c);
Json to_json(const BranchingDatum &d);
Json to_json(Complex z);
Json to_json(const RadicalExpr &e);
Json to_json(const std::vector<Complex> &values);

/// Throws InvalidInput on malformed JSON structure, InvalidPermutation or
/// InvalidConstellation on invalid content.
Permutation permutation_from_json(const Json &j);
Constellation constellation_from_json(const Json &j);
BranchingDatum datum_from_json(const Json &j);
RadicalExpr radical_from_json(const Json &j);

/// Coefficients high-to-low as rational strings.
Json polynomial_to_json(const ExactPolynomial &p);

} // namespace ramified
