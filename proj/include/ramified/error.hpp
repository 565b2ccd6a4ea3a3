#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramified {

enum class ErrorKind {
  InvalidInput,
  InvalidPermutation,
  DegreeMismatch,
  CapExceeded,
  NotTransitive,
  InvalidConstellation,
  InvalidDatum,
  NonIntegerGenus,
  NegativeGenus,
  LabelMismatch,
  NonDivisor,
  NotPrimeDegree,
  NotSolvable,
  UnrealizableParam,
  GenusTooSmall,
  NoSurjection,
  DivisionByZero,
  BranchLimit,
  NotSingular,
  DegenerateLeading,
  DegenerateQuartic,
  NotIndecomposable,
  DerivativeDegenerate,
  NumericFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every library operation. The kind is stable and
/// is what the CLI reports in its machine-readable error output.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace ramified
