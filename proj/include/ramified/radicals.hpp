#pragma once

/**
 * @file radicals.hpp
 * @brief Chebyshev inversion, cubics by critical values, quartics by a
 *        pencil of conics.
 *
 * The radical builders take the target as an expression: a rational
 * constant, or RadicalExpr::variable() for a formula in w. Every returned
 * expression contains all solutions among its values; other values are
 * spurious branches that callers filter by substitution.
 */

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "ramified/polynomial.hpp"
#include "ramified/radical.hpp"

namespace ramified {

/// P_0 = 1, P_1 = z, P_{n+1} = 2z P_n - P_{n-1}.
ExactPolynomial chebyshev(unsigned n);

/// Root(n, w); w itself for n = 1.
RadicalExpr invert_power(unsigned n, const RadicalExpr &w);

/// (Root(n, w + i S) + Root(n, w - i S)) / 2 with S = Root(2, 1 - w^2)
/// shared by both terms.
RadicalExpr invert_chebyshev(unsigned n, const RadicalExpr &w);

/// All x with p(x) = t for deg p = 1 or 2.
RadicalExpr linear_radical(const ExactPolynomial &p, const RadicalExpr &t);
RadicalExpr quadratic_radical(const ExactPolynomial &p, const RadicalExpr &t);

/// All x with p(x) = t for a cubic: a pure cube root when p has one finite
/// critical value, Chebyshev inversion after a linear change otherwise.
RadicalExpr cubic_radical(const ExactPolynomial &p, const RadicalExpr &t);

/// A single expression whose values are the union of the parts' values.
RadicalExpr radical_union(const std::vector<RadicalExpr> &parts);

struct CubicSolution {
  RadicalExpr radical;
  /// True when p - v is a constant times a cube of a linear polynomial.
  bool cube_case = false;
  /// Roots of p(z) = v with multiplicity.
  std::vector<Complex> roots;
};

/// Throws DegenerateLeading unless deg p == 3.
CubicSolution solve_cubic(const ExactPolynomial &p, const Rational &v = 0);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using ComplexMatrix3 = std::array<std::array<Complex, 3>, 3>;
/// Line l0 x + l1 y + l2 = 0 in projective coordinates (x, y, 1).
using Line = std::array<Complex, 3>;

struct Conic {
  Matrix3 m{};  // symmetric

  /// Value of (x, y, 1) M (x, y, 1)^T.
  Rational eval(const Rational &x, const Rational &y) const;
  ComplexMatrix3 to_complex() const;
};

struct Pencil {
  Conic q1;  // a y^2 + b x y + c x^2 + d x + e
  Conic q2;  // y - x^2
  /// det(M1 + lambda M2) as a cubic in lambda.
  ExactPolynomial discriminant;
};

Pencil build_pencil(const ExactPolynomial &p);

/// det of a 3x3 matrix of polynomials (in lambda).
ExactPolynomial polynomial_det(const std::array<std::array<ExactPolynomial, 3>, 3> &m);

/// Factor a singular conic into two lines (equal for rank 1). Throws
/// NotSingular when |det| > 1e-10 (1 + |M|^3).
std::pair<Line, Line> split_singular_conic(const ComplexMatrix3 &m);
std::pair<Line, Line> split_singular_conic(const Conic &c);

/// Intersection of two lines as a projective point.
std::array<Complex, 3> intersect_lines(const Line &a, const Line &b);

/// All x with p(x) = t for a quartic, through the singular member of the
/// pencil of Q1 = a y^2 + b x y + c x^2 + d x + (e - t) and y = x^2.
RadicalExpr quartic_radical(const ExactPolynomial &p, const RadicalExpr &t);

struct QuarticSolution {
  std::vector<Complex> roots;    // with multiplicity
  std::vector<Complex> lambdas;  // roots of the pencil discriminant
  /// Indices into lambdas of the two singular conics used.
  std::array<std::size_t, 2> used{0, 0};
  /// Repeated roots: solved from the squarefree factors instead.
  bool degenerate = false;
  RadicalExpr radical;
};

/// Throws DegenerateLeading unless deg p == 4, NumericFailure if a root
/// fails |p(x)| < 1e-8 |p|.
QuarticSolution solve_quartic_pencil(const ExactPolynomial &p);

} // namespace ramified
