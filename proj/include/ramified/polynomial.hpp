#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials with rational coefficients.
 *
 * Coefficients are stored low-to-high. The zero polynomial has no
 * coefficients and degree -1; every other polynomial has a nonzero leading
 * coefficient.
 */

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "ramified/rational.hpp"

namespace ramified {

using Complex = std::complex<double>;

class ExactPolynomial {
public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> low_to_high);
  static ExactPolynomial from_high_to_low(const std::vector<Rational> &coeffs);
  static ExactPolynomial constant(const Rational &c);
  static ExactPolynomial monomial(const Rational &c, std::size_t degree);
  /// z
  static ExactPolynomial identity();
  /// alpha z + beta
  static ExactPolynomial linear(const Rational &alpha, const Rational &beta);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const Rational &leading() const;

  ExactPolynomial derivative() const;
  ExactPolynomial monic() const;
  Rational eval(const Rational &x) const;
  Complex eval(Complex x) const;
  std::vector<Complex> to_complex() const;
  /// Euclidean norm of the coefficient vector.
  double norm() const;

  friend ExactPolynomial operator+(const ExactPolynomial &a, const ExactPolynomial &b);
  friend ExactPolynomial operator-(const ExactPolynomial &a, const ExactPolynomial &b);
  friend ExactPolynomial operator*(const ExactPolynomial &a, const ExactPolynomial &b);
  friend ExactPolynomial operator*(const Rational &c, const ExactPolynomial &a);
  friend ExactPolynomial operator-(const ExactPolynomial &a);
  friend bool operator==(const ExactPolynomial &, const ExactPolynomial &) = default;

  ExactPolynomial pow(std::size_t e) const;

  std::string to_string(const std::string &var = "z") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// outer(inner)
ExactPolynomial compose(const ExactPolynomial &outer, const ExactPolynomial &inner);

/// (quotient, remainder); throws DivisionByZero for a zero divisor.
std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial &a, const ExactPolynomial &b);

/// Monic gcd (zero if both are zero).
ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b);

/// Yun's squarefree decomposition of a nonconstant polynomial: monic
/// squarefree factors with their multiplicities, product equal to p / lead(p).
std::vector<std::pair<ExactPolynomial, std::size_t>> squarefree_decomposition(const ExactPolynomial &p);

bool is_squarefree(const ExactPolynomial &p);

/// Numeric roots with multiplicity (exact multiplicities from the
/// squarefree decomposition, each factor solved by companion eigenvalues
/// and polished by Newton's method).
std::vector<Complex> numeric_roots(const ExactPolynomial &p);

/// Newton iterations on p starting at x.
Complex newton_polish(const ExactPolynomial &p, Complex x, int iterations = 8);

} // namespace ramified
