#include "ramified/polynomial.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "ramified/error.hpp"

namespace ramified {

ExactPolynomial::ExactPolynomial(std::vector<Rational> low_to_high) : coeffs_(std::move(low_to_high))
{
  for (auto &c : coeffs_)
    c.canonicalize();
  trim();
}

void ExactPolynomial::trim()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::from_high_to_low(const std::vector<Rational> &coeffs)
{
  return ExactPolynomial(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

ExactPolynomial ExactPolynomial::constant(const Rational &c)
{
  return ExactPolynomial(std::vector<Rational>{c});
}

ExactPolynomial ExactPolynomial::monomial(const Rational &c, std::size_t degree)
{
  std::vector<Rational> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial ExactPolynomial::identity()
{
  return monomial(1, 1);
}

ExactPolynomial ExactPolynomial::linear(const Rational &alpha, const Rational &beta)
{
  return ExactPolynomial(std::vector<Rational>{beta, alpha});
}

Rational ExactPolynomial::coeff(std::size_t i) const
{
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational &ExactPolynomial::leading() const
{
  if (coeffs_.empty())
    throw Error(ErrorKind::InvalidInput, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

ExactPolynomial ExactPolynomial::derivative() const
{
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::monic() const
{
  if (is_zero())
    return *this;
  const Rational lead = leading();
  std::vector<Rational> out;
  for (const auto &c : coeffs_)
    out.push_back(c / lead);
  return ExactPolynomial(std::move(out));
}

Rational ExactPolynomial::eval(const Rational &x) const
{
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Complex ExactPolynomial::eval(Complex x) const
{
  Complex acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

std::vector<Complex> ExactPolynomial::to_complex() const
{
  std::vector<Complex> out;
  for (const auto &c : coeffs_)
    out.emplace_back(to_double(c), 0.0);
  return out;
}

double ExactPolynomial::norm() const
{
  double sum = 0;
  for (const auto &c : coeffs_) {
    const double v = to_double(c);
    sum += v * v;
  }
  return std::sqrt(sum);
}

ExactPolynomial operator+(const ExactPolynomial &a, const ExactPolynomial &b)
{
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(i) + b.coeff(i);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator-(const ExactPolynomial &a)
{
  std::vector<Rational> out;
  for (const auto &c : a.coeffs_)
    out.push_back(-c);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator-(const ExactPolynomial &a, const ExactPolynomial &b)
{
  return a + (-b);
}

ExactPolynomial operator*(const ExactPolynomial &a, const ExactPolynomial &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator*(const Rational &c, const ExactPolynomial &a)
{
  std::vector<Rational> out;
  for (const auto &x : a.coeffs_)
    out.push_back(c * x);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::pow(std::size_t e) const
{
  ExactPolynomial result = constant(1);
  ExactPolynomial base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

std::string ExactPolynomial::to_string(const std::string &var) const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational &c = coeffs_[k];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    const bool unit = mag == 1;
    if (!unit || k == 0)
      os << ramified::to_string(mag);
    if (k > 0) {
      if (!unit)
        os << "*";
      os << var;
      if (k > 1)
        os << "^" << k;
    }
  }
  return os.str();
}

ExactPolynomial compose(const ExactPolynomial &outer, const ExactPolynomial &inner)
{
  ExactPolynomial acc;
  const auto &c = outer.coeffs();
  for (std::size_t k = c.size(); k-- > 0;)
    acc = acc * inner + ExactPolynomial::constant(c[k]);
  return acc;
}

std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial &a, const ExactPolynomial &b)
{
  if (b.is_zero())
    throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db)
    return {ExactPolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Rational &lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0)
      continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b)
{
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<ExactPolynomial, std::size_t>> squarefree_decomposition(const ExactPolynomial &p)
{
  if (p.degree() < 1)
    throw Error(ErrorKind::InvalidInput, "squarefree decomposition needs a nonconstant polynomial");
  std::vector<std::pair<ExactPolynomial, std::size_t>> factors;
  const ExactPolynomial f = p.monic();
  const ExactPolynomial fp = f.derivative();
  ExactPolynomial a = gcd(f, fp);
  ExactPolynomial b = divmod(f, a).first;
  ExactPolynomial c = divmod(fp, a).first;
  ExactPolynomial d = c - b.derivative();
  for (std::size_t i = 1; b.degree() >= 1; ++i) {
    ExactPolynomial g = gcd(b, d);
    if (g.degree() >= 1)
      factors.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return factors;
}

bool is_squarefree(const ExactPolynomial &p)
{
  return p.degree() >= 1 && gcd(p, p.derivative()).degree() == 0;
}

Complex newton_polish(const ExactPolynomial &p, Complex x, int iterations)
{
  const ExactPolynomial dp = p.derivative();
  for (int k = 0; k < iterations; ++k) {
    const Complex fx = p.eval(x);
    const Complex dfx = dp.eval(x);
    if (std::abs(dfx) == 0.0)
      break;
    const Complex next = x - fx / dfx;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag()))
      break;
    if (std::abs(p.eval(next)) > std::abs(fx))
      break;
    x = next;
  }
  return x;
}

namespace {

std::vector<Complex> squarefree_roots(const ExactPolynomial &f)
{
  const int n = f.degree();
  if (n == 1)
    return {Complex(to_double(-f.coeff(0) / f.coeff(1)), 0.0)};
  Eigen::VectorXd coeffs(n + 1);
  for (int i = 0; i <= n; ++i)
    coeffs[i] = to_double(f.coeff(static_cast<std::size_t>(i)));
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i)
    roots.push_back(newton_polish(f, solver.roots()[i]));
  return roots;
}

} // namespace

std::vector<Complex> numeric_roots(const ExactPolynomial &p)
{
  if (p.degree() < 1)
    return {};
  std::vector<Complex> roots;
  for (const auto &[factor, multiplicity] : squarefree_decomposition(p))
    for (const Complex &r : squarefree_roots(factor))
      roots.insert(roots.end(), multiplicity, r);
  return roots;
}

} // namespace ramified
