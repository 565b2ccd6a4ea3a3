#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <set>

#include "ramified/error.hpp"
#include "ramified/radicals.hpp"
#include "support.hpp"

using namespace ramified;
using test_support::Rng;

namespace {

ExactPolynomial H(std::vector<Rational> high_to_low) { return ExactPolynomial::from_high_to_low(high_to_low); }
RadicalExpr K(const Rational &q) { return RadicalExpr::constant(q); }

ErrorKind kind_of(auto &&f)
{
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

bool contains(const std::vector<Complex> &values, Complex x, double tol = 1e-9)
{
  return std::any_of(values.begin(), values.end(), [&](Complex v) { return std::abs(v - x) < tol; });
}

// Ratio of the product of the two linear forms to the quadratic form at random points.
double form_mismatch(const ComplexMatrix3 &m, const std::pair<Line, Line> &lines)
{
  Rng rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  std::optional<Complex> ratio;
  double worst = 0;
  for (int s = 0; s < 8; ++s) {
    const std::array<Complex, 3> v{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), 1.0};
    Complex q = 0, l1 = 0, l2 = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      l1 += lines.first[i] * v[i];
      l2 += lines.second[i] * v[i];
      for (std::size_t j = 0; j < 3; ++j)
        q += v[i] * m[i][j] * v[j];
    }
    const Complex r = l1 * l2 / q;
    if (!ratio)
      ratio = r;
    worst = std::max(worst, std::abs(r - *ratio) / std::abs(*ratio));
  }
  return worst;
}

std::set<unsigned> root_index_set(const RadicalExpr &e)
{
  const auto v = e.root_indices();
  return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("Chebyshev polynomials")
{
  CHECK(chebyshev(0) == H({1}));
  CHECK(chebyshev(1) == H({1, 0}));
  CHECK(chebyshev(3) == H({4, 0, -3, 0}));
  CHECK(chebyshev(5) == H({16, 0, -20, 0, 5, 0}));
  for (unsigned n = 0; n <= 10; ++n)
    for (double x : {0.1, 0.7, 1.3, 2.9})
      CHECK(std::abs(chebyshev(n).eval(Complex(std::cos(x))).real() - std::cos(n * x)) < 1e-12);
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned n = 1; n <= 6; ++n) {
      CHECK(compose(chebyshev(m), chebyshev(n)) == chebyshev(m * n));
      CHECK(compose(chebyshev(n), chebyshev(m)) == chebyshev(m * n));
    }
}

TEST_CASE("power inversion")
{
  const auto values = eval_multi(invert_power(3, K(8))).values;
  CHECK(values.size() == 3);
  const Complex omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  CHECK(contains(values, 2.0));
  CHECK(contains(values, 2.0 * omega));
  CHECK(contains(values, 2.0 * omega * omega));
  CHECK(invert_power(1, K(5)).is_rational());

  Rng rng(71);
  for (int s = 0; s < 30; ++s) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 7);
    const Rational w = test_support::random_rational(rng, 20, 7);
    for (const Complex &v : eval_multi(invert_power(n, K(w))).values)
      CHECK(std::abs(std::pow(v, static_cast<double>(n)) - to_double(w)) < 1e-9 * std::max(1.0, std::abs(to_double(w))));
  }
}

TEST_CASE("Chebyshev inversion has the classical shape")
{
  const auto e = invert_chebyshev(5, RadicalExpr::variable());
  REQUIRE(e.kind() == RadicalKind::Div);
  CHECK(e.rhs().is_rational());
  CHECK(e.rhs().value() == 2);
  const auto sum = e.lhs();
  REQUIRE(sum.kind() == RadicalKind::Add);
  CHECK(sum.lhs().kind() == RadicalKind::Root);
  CHECK(sum.lhs().index() == 5);
  CHECK(sum.rhs().kind() == RadicalKind::Root);
  CHECK(sum.lhs().lhs().kind() == RadicalKind::Add);
  CHECK(sum.rhs().lhs().kind() == RadicalKind::Sub);
  CHECK(root_index_set(e) == std::set<unsigned>{2, 5});
}

TEST_CASE("Chebyshev inversion examples")
{
  CHECK(contains(eval_multi(invert_chebyshev(2, K(-1))).values, 0.0));
  const auto v3 = eval_multi(invert_chebyshev(3, K(-1))).values;
  CHECK(contains(v3, -1.0));
  CHECK(contains(v3, 0.5));
}

TEST_CASE("Chebyshev inversion round trip on a grid")
{
  for (unsigned n = 2; n <= 8; ++n)
    for (int i = 0; i < 50; ++i) {
      const Rational w(2 * i - 49, 49);
      const auto values = eval_multi(invert_chebyshev(n, K(w))).values;
      const auto pn = chebyshev(n);
      std::size_t real_values = 0;
      double best = 1;
      for (const Complex &v : values) {
        const double err = std::abs(pn.eval(v) - to_double(w));
        best = std::min(best, err);
        // At w = +-1 the square root vanishes and mismatched real branches appear.
        if (i > 0 && i < 49 && std::abs(v.imag()) < 1e-9) {
          ++real_values;
          CHECK(err < 1e-8);
          CHECK(std::abs(v.real()) <= 1 + 1e-12);
        }
      }
      CHECK(best < 1e-8);
      if (i > 0 && i < 49)
        CHECK(real_values == n);
    }
}

TEST_CASE("multivalued evaluation")
{
  const auto i = RadicalExpr::imaginary_unit();
  CHECK(eval_multi(i * i).values == std::vector<Complex>{Complex(-1, 0)});
  const auto r = RadicalExpr::root(2, K(4));
  CHECK(eval_multi(r).values.size() == 2);
  CHECK(eval_multi(r * r).values.size() == 1);
  CHECK(std::abs(eval_multi(r * r).values.front() - 4.0) < 1e-12);
  CHECK(eval_multi(r + RadicalExpr::root(2, K(9))).values.size() == 4);
  CHECK(eval_multi(K(0)).values.size() == 1);
  CHECK(kind_of([] { RadicalExpr::root(1, K(2)); }) == ErrorKind::InvalidInput);

  const auto zero_root = RadicalExpr::root(2, K(0));
  CHECK(kind_of([&] { eval_multi(K(1) / zero_root); }) == ErrorKind::DivisionByZero);
  const auto maybe = RadicalExpr::root(2, K(1)) - K(1);
  const auto partial = eval_multi(K(1) / maybe);
  CHECK(partial.values.size() == 1);
  CHECK(partial.failed_branches == 1);
  CHECK(std::abs(partial.values.front() + 0.5) < 1e-12);

  EvalOptions tight;
  tight.max_worlds = 10;
  auto big = K(0);
  for (int k = 2; k <= 6; ++k)
    big = big + RadicalExpr::root(static_cast<unsigned>(k), K(k));
  CHECK(kind_of([&] { eval_multi(big, tight); }) == ErrorKind::BranchLimit);

  CHECK(kind_of([] { eval_multi(RadicalExpr::variable()); }) == ErrorKind::InvalidInput);
  EvalOptions at;
  at.w = Complex(0, 2);
  CHECK(eval_multi(RadicalExpr::variable() * RadicalExpr::variable(), at).values ==
        std::vector<Complex>{Complex(-4, 0)});
}

TEST_CASE("collapsed, parallel and naive evaluation agree")
{
  Rng rng(72);
  auto leaf = [&] { return K(test_support::random_rational(rng, 9, 4)); };
  for (int s = 0; s < 40; ++s) {
    auto a = RadicalExpr::root(2 + static_cast<unsigned>(rng() % 2), leaf() + RadicalExpr::imaginary_unit());
    auto b = RadicalExpr::root(2, a * leaf() + leaf());
    auto e = (a + b) * (a - leaf()) + RadicalExpr::root(3, b - a);
    EvalOptions naive;
    naive.collapse = false;
    const auto x = eval_multi(e).values;
    const auto y = eval_multi_serial(e).values;
    const auto z = eval_multi_serial(e, naive).values;
    REQUIRE(x.size() == y.size());
    REQUIRE(x.size() == z.size());
    for (const auto &v : z)
      CHECK(contains(x, v, 1e-9 * std::max(1.0, std::abs(v))));
  }
}

TEST_CASE("dedupe uses a relative tolerance")
{
  const auto d = dedupe_values({1.0, 1.0 + 1e-12, 1e6, 1e6 + 1e-5, 2.0}, 1e-9);
  CHECK(d.size() == 3);
}

TEST_CASE("cubic examples")
{
  const auto s = solve_cubic(H({1, 0, -3, 0}));
  CHECK_FALSE(s.cube_case);
  REQUIRE(s.roots.size() == 3);
  CHECK(test_support::multiset_distance(s.roots, {0.0, std::sqrt(3.0), -std::sqrt(3.0)}) < 1e-10);

  const auto c = solve_cubic(H({1, -3, 3, -1}), 8);
  CHECK(c.cube_case);
  CHECK(contains(c.roots, 3.0, 1e-10));
  CHECK(root_index_set(c.radical) == std::set<unsigned>{3});

  CHECK(kind_of([] { solve_cubic(H({1, 0, 1})); }) == ErrorKind::DegenerateLeading);

  const auto repeated = solve_cubic(H({1, -1, -1, 1}));  // (z-1)^2 (z+1)
  CHECK(test_support::multiset_distance(repeated.roots, {1.0, 1.0, -1.0}) < 1e-9);
}

TEST_CASE("random cubics agree with simultaneous iteration")
{
  Rng rng(73);
  for (int s = 0; s < 60; ++s) {
    const auto p = test_support::random_monic(rng, 3);
    const Rational v = test_support::random_rational(rng, 5, 3);
    const auto sol = solve_cubic(p, v);
    CHECK(root_index_set(sol.radical).size() <= 2);
    for (unsigned k : root_index_set(sol.radical))
      CHECK((k == 2 || k == 3));
    for (const Complex &x : sol.roots)
      CHECK(std::abs(p.eval(x) - to_double(v)) < 1e-8 * std::max(1.0, std::pow(std::abs(x), 3)));
    const auto target = p - ExactPolynomial::constant(v);
    if (is_squarefree(target))
      CHECK(test_support::multiset_distance(sol.roots, test_support::durand_kerner(target)) < 1e-7);
  }
}

TEST_CASE("pencil of conics")
{
  const auto pencil = build_pencil(H({1, 0, -5, 0, 4}));
  CHECK(pencil.q1.m[0][0] == -5);
  CHECK(pencil.q1.m[1][1] == 1);
  CHECK(pencil.q1.m[2][2] == 4);
  CHECK(pencil.q1.m[0][1] == 0);
  CHECK(pencil.q1.m[0][2] == 0);
  CHECK(pencil.q1.m[1][2] == 0);
  for (int t = -5; t <= 5; ++t)
    CHECK(pencil.q2.eval(t, t * t) == 0);
  CHECK(pencil.discriminant.degree() == 3);
  CHECK(is_squarefree(pencil.discriminant));

  // Points of the parabola on Q1 are exactly the roots.
  for (int x : {-2, -1, 1, 2})
    CHECK(pencil.q1.eval(x, x * x) == 0);
}

TEST_CASE("splitting singular conics")
{
  ComplexMatrix3 diff{};
  diff[0][0] = 1;
  diff[1][1] = -1;
  const auto lines = split_singular_conic(diff);
  CHECK(form_mismatch(diff, lines) < 1e-8);
  for (const Line &l : {lines.first, lines.second}) {
    CHECK(std::abs(l[2]) < 1e-12);
    CHECK(std::abs(std::abs(l[0]) - std::abs(l[1])) < 1e-12 * std::abs(l[0]));
  }

  ComplexMatrix3 sum{};
  sum[0][0] = 1;
  sum[1][1] = 1;
  const auto complex_lines = split_singular_conic(sum);
  CHECK(form_mismatch(sum, complex_lines) < 1e-8);
  const Complex slope = complex_lines.first[1] / complex_lines.first[0];
  CHECK(std::abs(std::abs(slope.imag()) - 1) < 1e-12);
  CHECK(std::abs(slope.real()) < 1e-12);

  ComplexMatrix3 regular{};
  regular[0][0] = 1;
  regular[1][1] = 1;
  regular[2][2] = -1;
  CHECK(kind_of([&] { split_singular_conic(regular); }) == ErrorKind::NotSingular);
}

TEST_CASE("singular members of the x^4 - 5x^2 + 4 pencil")
{
  const auto pencil = build_pencil(H({1, 0, -5, 0, 4}));
  const auto lambdas = numeric_roots(pencil.discriminant);
  REQUIRE(lambdas.size() == 3);
  const auto m1 = pencil.q1.to_complex(), m2 = pencil.q2.to_complex();
  std::vector<std::pair<Line, Line>> splits;
  for (const Complex &l : lambdas) {
    ComplexMatrix3 m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m[i][j] = m1[i][j] + l * m2[i][j];
    splits.push_back(split_singular_conic(m));
    CHECK(form_mismatch(m, splits.back()) < 1e-8);
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      std::vector<Complex> xs;
      for (const Line &l1 : {splits[a].first, splits[a].second})
        for (const Line &l2 : {splits[b].first, splits[b].second}) {
          const auto p = intersect_lines(l1, l2);
          REQUIRE(std::abs(p[2]) > 1e-12);
          const Complex x = p[0] / p[2], y = p[1] / p[2];
          CHECK(std::abs(y - x * x) < 1e-9);
          xs.push_back(x);
        }
      CHECK(test_support::multiset_distance(xs, {-2.0, -1.0, 1.0, 2.0}) < 1e-9);
    }
}

TEST_CASE("quartic examples")
{
  const auto s = solve_quartic_pencil(H({1, 0, -5, 0, 4}));
  CHECK_FALSE(s.degenerate);
  std::vector<double> re;
  for (const Complex &x : s.roots) {
    CHECK(std::abs(x.imag()) < 1e-12);
    re.push_back(x.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re == std::vector<double>{-2, -1, 1, 2});

  const auto power = solve_quartic_pencil(H({1, -4, 6, -4, 1}));
  CHECK(power.degenerate);
  CHECK(test_support::multiset_distance(power.roots, {1.0, 1.0, 1.0, 1.0}) < 1e-12);
  for (const Complex &v : eval_multi(power.radical).values)
    CHECK(std::abs(v - 1.0) < 1e-9);

  const auto biquadratic = solve_quartic_pencil(H({1, 0, -2, 0, 1}));
  CHECK(test_support::multiset_distance(biquadratic.roots, {1.0, 1.0, -1.0, -1.0}) < 1e-9);

  CHECK(kind_of([] { solve_quartic_pencil(H({1, 0, 0})); }) == ErrorKind::DegenerateLeading);
}

TEST_CASE("random quartics agree with simultaneous iteration")
{
  Rng rng(74);
  for (int s = 0; s < 40; ++s) {
    const auto p = test_support::random_monic(rng, 4);
    const auto sol = solve_quartic_pencil(p);
    REQUIRE(sol.roots.size() == 4);
    for (const Complex &x : sol.roots)
      CHECK(std::abs(p.eval(x)) < 1e-8 * p.norm() * std::max(1.0, std::pow(std::abs(x), 4)));
    CHECK(test_support::multiset_distance(sol.roots, test_support::durand_kerner(p)) < 1e-7);
    for (unsigned k : root_index_set(sol.radical))
      CHECK((k == 2 || k == 3));
    const auto values = eval_multi(sol.radical).values;
    for (const Complex &x : sol.roots)
      CHECK(contains(values, x, 1e-6 * std::max(1.0, std::abs(x))));
  }
}

TEST_CASE("quartic radical with a symbolic target")
{
  Rng rng(75);
  for (int s = 0; s < 10; ++s) {
    const auto p = test_support::random_monic(rng, 4, 5, 2);
    const auto e = quartic_radical(p, RadicalExpr::variable());
    CHECK(e.has_variable());
    EvalOptions at;
    at.w = Complex(0.3 * s - 1, 0.2);
    const auto values = eval_multi(e, at).values;
    std::size_t hits = 0;
    for (const Complex &x : values)
      hits += std::abs(p.eval(x) - *at.w) < 1e-7 * std::max(1.0, std::pow(std::abs(x), 4));
    CHECK(hits >= 4);
  }
}
