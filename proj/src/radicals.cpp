#include "ramified/radicals.hpp"

#include <algorithm>
#include <cmath>

#include "ramified/error.hpp"

namespace ramified {

namespace {

RadicalExpr k(const Rational &q) { return RadicalExpr::constant(q); }

double abs_poly_scale(const ExactPolynomial &p, Complex x)
{
  double scale = 0, power = 1;
  for (const auto &c : p.coeffs()) {
    scale += std::abs(to_double(c)) * power;
    power *= std::max(1.0, std::abs(x));
  }
  return scale;
}

void require_degree(const ExactPolynomial &p, int degree)
{
  if (p.degree() != degree)
    throw Error(ErrorKind::DegenerateLeading,
                "expected degree " + std::to_string(degree) + ", got " + std::to_string(p.degree()));
}

// deg f values among the candidates that f nearly annihilates, polished.
std::vector<Complex> pick_roots(const ExactPolynomial &f, const std::vector<Complex> &candidates)
{
  std::vector<std::pair<double, Complex>> scored;
  for (const Complex &x : candidates)
    scored.emplace_back(std::abs(f.eval(x)) / abs_poly_scale(f, x), x);
  std::sort(scored.begin(), scored.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });

  std::vector<Complex> chosen;
  for (const auto &[residual, x] : scored) {
    if (chosen.size() == static_cast<std::size_t>(f.degree()))
      break;
    const Complex polished = newton_polish(f, x);
    bool distinct = true;
    for (const Complex &y : chosen)
      if (std::abs(polished - y) <= 1e-6 * std::max(1.0, std::abs(y)))
        distinct = false;
    if (distinct && residual < 1e-6)
      chosen.push_back(polished);
  }
  if (chosen.size() != static_cast<std::size_t>(f.degree()))
    throw Error(ErrorKind::NumericFailure, "radical values do not cover the roots of " + f.to_string());
  return chosen;
}

} // namespace

ExactPolynomial chebyshev(unsigned n)
{
  ExactPolynomial prev = ExactPolynomial::constant(1);
  if (n == 0)
    return prev;
  ExactPolynomial cur = ExactPolynomial::identity();
  const ExactPolynomial two_z = ExactPolynomial::monomial(2, 1);
  for (unsigned m = 1; m < n; ++m) {
    ExactPolynomial next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RadicalExpr invert_power(unsigned n, const RadicalExpr &w)
{
  if (n == 0)
    throw Error(ErrorKind::InvalidInput, "power must be at least 1");
  return n == 1 ? w : RadicalExpr::root(n, w);
}

RadicalExpr invert_chebyshev(unsigned n, const RadicalExpr &w)
{
  if (n == 0)
    throw Error(ErrorKind::InvalidInput, "degree must be at least 1");
  if (n == 1)
    return w;
  const RadicalExpr s = RadicalExpr::root(2, k(1) - w * w);
  const RadicalExpr is = RadicalExpr::imaginary_unit() * s;
  return (RadicalExpr::root(n, w + is) + RadicalExpr::root(n, w - is)) / k(2);
}

RadicalExpr linear_radical(const ExactPolynomial &p, const RadicalExpr &t)
{
  require_degree(p, 1);
  return (t - k(p.coeff(0))) / k(p.coeff(1));
}

RadicalExpr quadratic_radical(const ExactPolynomial &p, const RadicalExpr &t)
{
  require_degree(p, 2);
  const Rational &a = p.coeff(2);
  const Rational b = p.coeff(1), c = p.coeff(0);
  const RadicalExpr disc = k(b * b) - k(4 * a) * (k(c) - t);
  return (k(-b) + RadicalExpr::root(2, disc)) / k(2 * a);
}

RadicalExpr cubic_radical(const ExactPolynomial &p, const RadicalExpr &t)
{
  require_degree(p, 3);
  const Rational a3 = p.coeff(3);
  const Rational z0 = -p.coeff(2) / (3 * a3);
  // q(u) = p(u + z0) = a3 u^3 + B u + C0
  const ExactPolynomial q = compose(p, ExactPolynomial::linear(1, z0));
  const Rational B = q.coeff(1), C0 = q.coeff(0);
  const RadicalExpr shifted = t - k(C0);
  if (B == 0)
    return k(z0) + RadicalExpr::root(3, shifted / k(a3));

  // u = y / c with c^2 = s turns the equation into P_3(y) = W.
  const Rational s = -3 * a3 / (4 * B);
  RadicalExpr c;
  RadicalExpr c_cubed;
  if (auto exact = rational_sqrt(s)) {
    c = k(*exact);
    c_cubed = k(*exact * s);
  } else {
    c = RadicalExpr::root(2, k(s));
    c_cubed = k(s) * c;
  }
  const RadicalExpr W = shifted * c_cubed / k(a3 / 4);
  return k(z0) + invert_chebyshev(3, W) / c;
}

RadicalExpr radical_union(const std::vector<RadicalExpr> &parts)
{
  if (parts.empty())
    throw Error(ErrorKind::InvalidInput, "empty union");
  RadicalExpr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    // (A + B)/2 + s (A - B)/2 with s = +-1 picks A or B.
    const RadicalExpr &b = parts[i];
    const RadicalExpr sign = RadicalExpr::root(2, k(1));
    acc = (acc + b) / k(2) + sign * (acc - b) / k(2);
  }
  return acc;
}

CubicSolution solve_cubic(const ExactPolynomial &p, const Rational &v)
{
  require_degree(p, 3);
  CubicSolution sol;
  sol.radical = cubic_radical(p, k(v));
  const ExactPolynomial q = compose(p, ExactPolynomial::linear(1, -p.coeff(2) / (3 * p.coeff(3))));
  sol.cube_case = q.coeff(1) == 0;

  const ExactPolynomial target = p - ExactPolynomial::constant(v);
  const auto candidates = eval_multi(sol.radical).values;
  for (const auto &[factor, multiplicity] : squarefree_decomposition(target))
    for (const Complex &root : pick_roots(factor, candidates))
      sol.roots.insert(sol.roots.end(), multiplicity, root);
  return sol;
}

Rational Conic::eval(const Rational &x, const Rational &y) const
{
  const std::array<Rational, 3> v{x, y, 1};
  Rational total = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      total += v[i] * m[i][j] * v[j];
  return total;
}

ComplexMatrix3 Conic::to_complex() const
{
  ComplexMatrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out[i][j] = to_double(m[i][j]);
  return out;
}

ExactPolynomial polynomial_det(const std::array<std::array<ExactPolynomial, 3>, 3> &m)
{
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Pencil build_pencil(const ExactPolynomial &p)
{
  require_degree(p, 4);
  const Rational a = p.coeff(4), b = p.coeff(3), c = p.coeff(2), d = p.coeff(1), e = p.coeff(0);
  Pencil pencil;
  pencil.q1.m = {{{c, b / 2, d / 2}, {b / 2, a, 0}, {d / 2, 0, e}}};
  pencil.q2.m = {{{-1, 0, 0}, {0, 0, Rational(1, 2)}, {0, Rational(1, 2), 0}}};
  std::array<std::array<ExactPolynomial, 3>, 3> entries;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      entries[i][j] = ExactPolynomial::linear(pencil.q2.m[i][j], pencil.q1.m[i][j]);
  pencil.discriminant = polynomial_det(entries);
  return pencil;
}

namespace {

Complex det3(const ComplexMatrix3 &m)
{
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ComplexMatrix3 adjugate(const ComplexMatrix3 &m)
{
  ComplexMatrix3 adj;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return adj;
}

} // namespace

std::pair<Line, Line> split_singular_conic(const ComplexMatrix3 &m)
{
  double norm = 0;
  for (const auto &row : m)
    for (const auto &x : row)
      norm = std::max(norm, std::abs(x));
  if (std::abs(det3(m)) > 1e-10 * (1 + norm * norm * norm))
    throw Error(ErrorKind::NotSingular, "conic is not singular");

  const ComplexMatrix3 adj = adjugate(m);
  std::size_t i = 0;
  for (std::size_t r = 1; r < 3; ++r)
    if (std::abs(adj[r][r]) > std::abs(adj[i][i]))
      i = r;

  if (std::abs(adj[i][i]) <= 1e-12 * (1 + norm * norm)) {
    // Rank 1: M = l l^T.
    std::size_t j = 0;
    for (std::size_t r = 1; r < 3; ++r)
      if (std::abs(m[r][r]) > std::abs(m[j][j]))
        j = r;
    const Complex scale = std::sqrt(m[j][j]);
    if (std::abs(scale) == 0.0)
      throw Error(ErrorKind::DegenerateQuartic, "zero conic");
    Line l{m[0][j] / scale, m[1][j] / scale, m[2][j] / scale};
    return {l, l};
  }

  // M = (l m^T + m l^T)/2; adding the cross-product matrix of p turns it
  // into the rank-one matrix l m^T.
  const Complex beta = std::sqrt(-adj[i][i]);
  const std::array<Complex, 3> p{adj[0][i] / beta, adj[1][i] / beta, adj[2][i] / beta};
  ComplexMatrix3 c = m;
  c[0][1] += p[2];
  c[1][0] -= p[2];
  c[0][2] -= p[1];
  c[2][0] += p[1];
  c[1][2] += p[0];
  c[2][1] -= p[0];
  std::size_t r = 0, s = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (std::abs(c[a][b]) > std::abs(c[r][s]))
        r = a, s = b;
  Line row{c[r][0], c[r][1], c[r][2]};
  Line col{c[0][s], c[1][s], c[2][s]};
  return {row, col};
}

std::pair<Line, Line> split_singular_conic(const Conic &c)
{
  return split_singular_conic(c.to_complex());
}

std::array<Complex, 3> intersect_lines(const Line &a, const Line &b)
{
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

RadicalExpr degenerate_radical(const ExactPolynomial &q)
{
  std::vector<RadicalExpr> parts;
  for (const auto &[factor, multiplicity] : squarefree_decomposition(q)) {
    (void)multiplicity;
    switch (factor.degree()) {
    case 1: parts.push_back(linear_radical(factor, k(0))); break;
    case 2: parts.push_back(quadratic_radical(factor, k(0))); break;
    case 3: parts.push_back(cubic_radical(factor, k(0))); break;
    default: throw Error(ErrorKind::DegenerateQuartic, "unexpected squarefree factor");
    }
  }
  return radical_union(parts);
}

} // namespace

RadicalExpr quartic_radical(const ExactPolynomial &p, const RadicalExpr &t)
{
  require_degree(p, 4);
  const Rational a = p.coeff(4), b = p.coeff(3), c = p.coeff(2), d = p.coeff(1), e = p.coeff(0);

  // Singular members: lambda^3 - c lambda^2 + (bd - 4aE) lambda + ((4ac - b^2)E - ad^2),
  // E = e - t.
  RadicalExpr lambda;
  if (t.is_rational()) {
    const ExactPolynomial q = p - ExactPolynomial::constant(t.value());
    if (!is_squarefree(q))
      return degenerate_radical(q);
    const Rational E = e - t.value();
    const ExactPolynomial cubic(
      std::vector<Rational>{(4 * a * c - b * b) * E - a * d * d, b * d - 4 * a * E, -c, 1});
    lambda = cubic_radical(cubic, k(0));
  } else {
    const RadicalExpr E = k(e) - t;
    const RadicalExpr B1 = k(b * d) - k(4 * a) * E;
    const RadicalExpr C1 = k(4 * a * c - b * b) * E - k(a * d * d);
    // lambda = mu + c/3, mu^3 + P mu + Q = 0, mu = 2 r y with r^2 = -P/3.
    const RadicalExpr minus_p_third = (k(c * c / 3) - B1) / k(3);
    const RadicalExpr Q = k(-2 * c * c * c / 27) + k(c / 3) * B1 + C1;
    const RadicalExpr r = RadicalExpr::root(2, minus_p_third);
    const RadicalExpr W = -Q / (k(2) * r * minus_p_third);
    lambda = k(2) * r * invert_chebyshev(3, W) + k(c / 3);
  }

  // The singular conic is a y^2 + (b x + lambda) y + (c - lambda) x^2 + d x + E = 0
  // with y-discriminant (alpha x + beta)^2; intersect one line with y = x^2.
  const RadicalExpr A2 = k(b * b - 4 * a * c) + k(4 * a) * lambda;
  const RadicalExpr A1 = k(2 * b) * lambda - k(4 * a * d);
  const RadicalExpr alpha = RadicalExpr::root(2, A2);
  const RadicalExpr beta = A1 / (k(2) * alpha);
  const RadicalExpr b_minus_alpha = k(b) - alpha;
  const RadicalExpr disc = b_minus_alpha * b_minus_alpha - k(8 * a) * (lambda - beta);
  return (-b_minus_alpha + RadicalExpr::root(2, disc)) / k(4 * a);
}

QuarticSolution solve_quartic_pencil(const ExactPolynomial &p)
{
  require_degree(p, 4);
  QuarticSolution sol;
  sol.radical = quartic_radical(p, k(0));

  if (!is_squarefree(p)) {
    sol.degenerate = true;
    for (const auto &[factor, multiplicity] : squarefree_decomposition(p))
      for (const Complex &root : numeric_roots(factor))
        sol.roots.insert(sol.roots.end(), multiplicity, root);
  } else {
    const Pencil pencil = build_pencil(p);
    sol.lambdas = solve_cubic(pencil.discriminant).roots;
    double best = -1;
    for (std::size_t i = 0; i < sol.lambdas.size(); ++i)
      for (std::size_t j = i + 1; j < sol.lambdas.size(); ++j)
        if (std::abs(sol.lambdas[i] - sol.lambdas[j]) > best) {
          best = std::abs(sol.lambdas[i] - sol.lambdas[j]);
          sol.used = {i, j};
        }

    const ComplexMatrix3 m1 = pencil.q1.to_complex(), m2 = pencil.q2.to_complex();
    auto member = [&](Complex lambda) {
      ComplexMatrix3 m;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          m[i][j] = m1[i][j] + lambda * m2[i][j];
      return m;
    };
    const auto first = split_singular_conic(member(sol.lambdas[sol.used[0]]));
    const auto second = split_singular_conic(member(sol.lambdas[sol.used[1]]));
    for (const Line &l1 : {first.first, first.second})
      for (const Line &l2 : {second.first, second.second}) {
        const auto point = intersect_lines(l1, l2);
        const double size = std::max({std::abs(point[0]), std::abs(point[1]), std::abs(point[2])});
        if (std::abs(point[2]) <= 1e-12 * size)
          continue;  // point at infinity
        sol.roots.push_back(newton_polish(p, point[0] / point[2]));
      }
    if (sol.roots.size() != 4)
      throw Error(ErrorKind::NumericFailure,
                  "line intersections gave " + std::to_string(sol.roots.size()) + " finite points");
  }

  const double bound = 1e-8 * p.norm();
  for (const Complex &x : sol.roots)
    if (std::abs(p.eval(x)) >= bound)
      throw Error(ErrorKind::NumericFailure, "root fails verification");
  return sol;
}

} // namespace ramified
