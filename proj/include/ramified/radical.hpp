#pragma once

/**
 * @file radical.hpp
 * @brief Multivalued radical expressions.
 *
 * Expressions are immutable DAGs. A Root node denotes all k of its k-th
 * roots; a node reached along several paths takes one value per
 * evaluation "world", so sqrt(x) + sqrt(x) built from a single shared
 * Root node has values {2 sqrt(x), -2 sqrt(x)} and never 0. A Variable node
 * stands for the target value w supplied at evaluation time.
 */

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramified/rational.hpp"

namespace ramified {

using Complex = std::complex<double>;

enum class RadicalKind { Rational, ImaginaryUnit, Variable, Add, Sub, Mul, Div, Neg, Root };

class RadicalExpr {
public:
  struct Node;

  /// The rational 0.
  RadicalExpr();
  static RadicalExpr constant(const Rational &q);
  static RadicalExpr imaginary_unit();
  static RadicalExpr variable();
  /// Throws InvalidInput for k < 2.
  static RadicalExpr root(unsigned k, const RadicalExpr &arg);

  RadicalKind kind() const noexcept;
  /// Value of a Rational node.
  const Rational &value() const;
  unsigned index() const;
  RadicalExpr lhs() const;
  RadicalExpr rhs() const;
  bool is_rational() const noexcept { return kind() == RadicalKind::Rational; }
  const Node *id() const noexcept { return node_.get(); }

  /// Indices of the distinct Root nodes.
  std::vector<unsigned> root_indices() const;
  /// Number of distinct nodes.
  std::size_t node_count() const;
  bool has_variable() const;
  std::string to_string() const;

  // Rational operands are folded; dividing by an exact zero throws DivisionByZero.
  friend RadicalExpr operator+(const RadicalExpr &a, const RadicalExpr &b);
  friend RadicalExpr operator-(const RadicalExpr &a, const RadicalExpr &b);
  friend RadicalExpr operator*(const RadicalExpr &a, const RadicalExpr &b);
  friend RadicalExpr operator/(const RadicalExpr &a, const RadicalExpr &b);
  friend RadicalExpr operator-(const RadicalExpr &a);

private:
  explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RadicalExpr make(RadicalKind kind, RadicalExpr a, RadicalExpr b);
  std::shared_ptr<const Node> node_;
};

struct RadicalExpr::Node {
  RadicalKind kind = RadicalKind::Rational;
  Rational value = 0;
  unsigned index = 0;
  std::shared_ptr<const Node> a, b;
};

struct EvalOptions {
  /// Value bound to Variable nodes.
  std::optional<Complex> w;
  /// Cap on the worlds enumerated for any single region; BranchLimit beyond.
  std::size_t max_worlds = 4'000'000;
  /// Values closer than tolerance * max(1, |v|) are merged.
  double tolerance = 1e-9;
  /// Evaluate subexpressions that own all of their Root nodes separately
  /// and feed their deduplicated value sets upward.
  bool collapse = true;
};

struct EvalResult {
  std::vector<Complex> values;  // deduplicated, sorted by real part
  std::size_t failed_branches = 0;
  std::size_t worlds = 0;
};

/// All values over every consistent choice of roots. Branches that divide
/// by zero or produce NaN are counted in failed_branches and skipped;
/// DivisionByZero is thrown only when no branch survives. Worlds are
/// evaluated in parallel.
EvalResult eval_multi(const RadicalExpr &e, const EvalOptions &options = {});

/// Serial reference implementation of eval_multi.
EvalResult eval_multi_serial(const RadicalExpr &e, const EvalOptions &options = {});

/// Sorted, merged copy of values.
std::vector<Complex> dedupe_values(std::vector<Complex> values, double tolerance);

} // namespace ramified
