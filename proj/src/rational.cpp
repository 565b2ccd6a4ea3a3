#include "ramified/rational.hpp"

#include <cctype>

#include "ramified/error.hpp"

namespace ramified {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

[[noreturn]] void bad(std::string_view text)
{
  throw Error(ErrorKind::InvalidInput, "not a rational number: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      bad(text);
    mpz_class d{std::string(den), 10};
    if (d == 0)
      bad(text);
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      bad(text);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
      scale *= 10;
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = Rational(digits, scale);
  } else {
    if (!all_digits(s))
      bad(text);
    value = Rational(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational &q)
{
  return q.get_str();
}

double to_double(const Rational &q)
{
  return q.get_d();
}

std::optional<Rational> rational_sqrt(const Rational &q)
{
  if (q < 0)
    return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational &base, unsigned exponent)
{
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i)
    result *= base;
  return result;
}

} // namespace ramified
