#pragma once

/**
 * @file decompose.hpp
 * @brief Polynomial decomposition, factor classification and radical
 *        invertibility verdicts.
 */

#include <optional>
#include <string_view>
#include <vector>

#include "ramified/covering.hpp"
#include "ramified/polynomial.hpp"
#include "ramified/radical.hpp"

namespace ramified {

struct CriticalDatum {
  /// Finite critical values "v1", "v2", ... ordered by (real, imag), then "inf".
  BranchingDatum datum;
  /// Numeric value of each finite entry, aligned with datum.entries().
  std::vector<Complex> values;
};

/// Branching datum of a polynomial map of degree >= 2. Multiplicities of
/// critical points are exact; critical values are clustered at relative
/// tolerance 1e-8.
CriticalDatum critical_datum(const ExactPolynomial &p);

/// Indecomposable factors g1, ..., gr with p = g1(g2(...gr)). Inner factors
/// are monic with zero constant term. Larger inner degrees are tried first,
/// so z^6 gives (z^2, z^3).
std::vector<ExactPolynomial> decompose_poly(const ExactPolynomial &p);

enum class FactorTag { PowerLike, ChebyshevLike, Degree4OrLess, Obstructed };

std::string_view factor_tag_name(FactorTag tag) noexcept;

/// p(z) = scale (z - center)^n + shift
struct PowerWitness {
  unsigned n = 0;
  Rational scale, center, shift;
};

/// p(z) = scale P_n(c (z - center)) / c^n + shift with c^2 = inner_scale_squared.
/// As linear changes: L2(z) = c (z - center), L1(w) = (scale / c^n) w + shift.
struct ChebyshevWitness {
  unsigned n = 0;
  Rational scale, center, inner_scale_squared, shift;
};

ExactPolynomial reconstruct(const PowerWitness &w);
ExactPolynomial reconstruct(const ChebyshevWitness &w);

struct FactorClass {
  FactorTag tag = FactorTag::Obstructed;
  ExactPolynomial factor;
  /// Absent for linear factors.
  std::optional<BranchingDatum> datum;
  std::optional<PowerWitness> power;
  std::optional<ChebyshevWitness> chebyshev;
};

/// Throws NotIndecomposable when p has a nontrivial decomposition.
FactorClass classify_factor(const ExactPolynomial &p);

struct RittVerdict {
  bool invertible = false;
  std::vector<FactorClass> factors;  // outermost first
  /// All z with p(z) = w, as an expression in the variable w.
  std::optional<RadicalExpr> inverse;
};

RittVerdict ritt_verdict(const ExactPolynomial &p);

/// Radical inverse of a single classified factor at the target t.
RadicalExpr invert_factor(const FactorClass &factor, const RadicalExpr &t);

struct NumericMonodromy {
  /// One slot per finite critical value (labels from critical_datum) in
  /// loop order, then "inf" closing the product.
  Constellation constellation;
  Complex base;
  std::size_t steps_per_loop = 0;
};

/// Monodromy of the roots of p(z) = w around each finite critical value,
/// by Newton continuation along a segment from a base point, a small
/// circle and back. Steps start at 720 per loop and double until every
/// loop closes onto the fiber.
NumericMonodromy numeric_monodromy(const ExactPolynomial &p);

} // namespace ramified
