#include "ramified/error.hpp"

namespace ramified {

std::string_view to_string(ErrorKind kind) noexcept
{
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::InvalidPermutation: return "InvalidPermutation";
  case ErrorKind::DegreeMismatch: return "DegreeMismatch";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::NotTransitive: return "NotTransitive";
  case ErrorKind::InvalidConstellation: return "InvalidConstellation";
  case ErrorKind::InvalidDatum: return "InvalidDatum";
  case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
  case ErrorKind::NegativeGenus: return "NegativeGenus";
  case ErrorKind::LabelMismatch: return "LabelMismatch";
  case ErrorKind::NonDivisor: return "NonDivisor";
  case ErrorKind::NotPrimeDegree: return "NotPrimeDegree";
  case ErrorKind::NotSolvable: return "NotSolvable";
  case ErrorKind::UnrealizableParam: return "UnrealizableParam";
  case ErrorKind::GenusTooSmall: return "GenusTooSmall";
  case ErrorKind::NoSurjection: return "NoSurjection";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::BranchLimit: return "BranchLimit";
  case ErrorKind::NotSingular: return "NotSingular";
  case ErrorKind::DegenerateLeading: return "DegenerateLeading";
  case ErrorKind::DegenerateQuartic: return "DegenerateQuartic";
  case ErrorKind::NotIndecomposable: return "NotIndecomposable";
  case ErrorKind::DerivativeDegenerate: return "DerivativeDegenerate";
  case ErrorKind::NumericFailure: return "NumericFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
  : std::runtime_error(message), kind_(kind)
{}

} // namespace ramified
