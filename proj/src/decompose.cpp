#include "ramified/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "ramified/classify.hpp"
#include "ramified/error.hpp"
#include "ramified/radicals.hpp"

namespace ramified {

namespace {

bool less_complex(Complex a, Complex b, double tol)
{
  if (std::abs(a.real() - b.real()) > tol)
    return a.real() < b.real();
  return a.imag() < b.imag();
}

} // namespace

CriticalDatum critical_datum(const ExactPolynomial &p)
{
  if (p.degree() < 2)
    throw Error(ErrorKind::InvalidInput, "critical datum needs degree at least 2");
  const ExactPolynomial dp = p.derivative();
  if (dp.degree() < 1)
    throw Error(ErrorKind::DerivativeDegenerate, "derivative has no roots");

  struct Critical {
    Complex value;
    std::size_t multiplicity;
  };
  std::vector<Critical> points;
  for (const auto &[factor, multiplicity] : squarefree_decomposition(dp))
    for (const Complex &r : numeric_roots(factor))
      points.push_back({p.eval(r), multiplicity});

  double scale = 1;
  for (const auto &c : points)
    scale = std::max(scale, std::abs(c.value));
  const double tol = 1e-8 * scale;

  // Single-linkage clustering.
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i].value - points[j].value) <= tol)
        parent[find(i)] = find(j);

  struct Cluster {
    Complex sum = 0;
    std::size_t count = 0;
    std::uint64_t order = 1;
  };
  std::vector<Cluster> clusters;
  std::vector<std::size_t> cluster_of(points.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t rootp = find(i);
    if (cluster_of[rootp] == static_cast<std::size_t>(-1)) {
      cluster_of[rootp] = clusters.size();
      clusters.emplace_back();
    }
    Cluster &c = clusters[cluster_of[rootp]];
    c.sum += points[i].value;
    ++c.count;
    c.order = std::lcm(c.order, static_cast<std::uint64_t>(points[i].multiplicity + 1));
  }
  std::sort(clusters.begin(), clusters.end(), [&](const Cluster &a, const Cluster &b) {
    return less_complex(a.sum / static_cast<double>(a.count), b.sum / static_cast<double>(b.count), tol);
  });

  CriticalDatum out;
  std::vector<DatumEntry> entries;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    entries.push_back({"v" + std::to_string(i + 1), clusters[i].order});
    out.values.push_back(clusters[i].sum / static_cast<double>(clusters[i].count));
  }
  entries.push_back({"inf", static_cast<std::uint64_t>(p.degree())});
  out.datum = BranchingDatum(std::move(entries));
  return out;
}

namespace {

// p = g(h) with deg h = d, h monic, h(0) = 0.
std::optional<std::pair<ExactPolynomial, ExactPolynomial>> try_split(const ExactPolynomial &p,
                                                                     std::size_t d)
{
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::size_t r = n / d;
  const ExactPolynomial q = p.monic();

  // Coefficients of z^{n-1} .. z^{n-d+1} of h^r fix h_{d-1} .. h_1 in turn.
  std::vector<Rational> h(d + 1, 0);
  h[d] = 1;
  for (std::size_t j = 1; j < d; ++j) {
    const Rational current = ExactPolynomial(h).pow(r).coeff(n - j);
    h[d - j] = (q.coeff(n - j) - current) / static_cast<unsigned long>(r);
  }
  const ExactPolynomial inner(h);

  std::vector<Rational> g;
  ExactPolynomial rest = p;
  while (!rest.is_zero()) {
    auto [quot, rem] = divmod(rest, inner);
    if (rem.degree() > 0)
      return std::nullopt;
    g.push_back(rem.coeff(0));
    rest = std::move(quot);
  }
  ExactPolynomial outer(std::move(g));
  if (outer.degree() != static_cast<int>(r) || compose(outer, inner) != p)
    return std::nullopt;
  return std::make_pair(std::move(outer), inner);
}

} // namespace

std::vector<ExactPolynomial> decompose_poly(const ExactPolynomial &p)
{
  if (p.degree() < 1)
    throw Error(ErrorKind::InvalidInput, "decomposition needs degree at least 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  for (std::size_t d = n - 1; d >= 2; --d) {
    if (n % d != 0)
      continue;
    if (auto split = try_split(p, d)) {
      auto out = decompose_poly(split->first);
      auto inner = decompose_poly(split->second);
      out.insert(out.end(), inner.begin(), inner.end());
      return out;
    }
  }
  return {p};
}

std::string_view factor_tag_name(FactorTag tag) noexcept
{
  switch (tag) {
  case FactorTag::PowerLike: return "PowerLike";
  case FactorTag::ChebyshevLike: return "ChebyshevLike";
  case FactorTag::Degree4OrLess: return "Degree4OrLess";
  case FactorTag::Obstructed: return "Obstructed";
  }
  return "Obstructed";
}

ExactPolynomial reconstruct(const PowerWitness &w)
{
  return w.scale * ExactPolynomial::linear(1, -w.center).pow(w.n) + ExactPolynomial::constant(w.shift);
}

namespace {

// P_n(c u) / c^n as a polynomial in u, given c^2 = s.
ExactPolynomial scaled_chebyshev(unsigned n, const Rational &s)
{
  const ExactPolynomial pn = chebyshev(n);
  std::vector<Rational> out(n + 1, 0);
  for (unsigned k = n % 2; k <= n; k += 2)
    out[k] = pn.coeff(k) / rational_pow(s, (n - k) / 2);
  return ExactPolynomial(std::move(out));
}

} // namespace

ExactPolynomial reconstruct(const ChebyshevWitness &w)
{
  return w.scale * compose(scaled_chebyshev(w.n, w.inner_scale_squared),
                           ExactPolynomial::linear(1, -w.center)) +
         ExactPolynomial::constant(w.shift);
}

namespace {

std::optional<PowerWitness> power_witness(const ExactPolynomial &p)
{
  const unsigned n = static_cast<unsigned>(p.degree());
  PowerWitness w;
  w.n = n;
  w.scale = p.leading();
  w.center = -p.coeff(n - 1) / (n * p.leading());
  w.shift = p.eval(w.center);
  if (reconstruct(w) != p)
    return std::nullopt;
  return w;
}

std::optional<ChebyshevWitness> chebyshev_witness(const ExactPolynomial &p)
{
  const unsigned n = static_cast<unsigned>(p.degree());
  ChebyshevWitness w;
  w.n = n;
  w.center = -p.coeff(n - 1) / (n * p.leading());
  const ExactPolynomial q = compose(p, ExactPolynomial::linear(1, w.center));
  if (q.coeff(n - 2) == 0)
    return std::nullopt;
  w.inner_scale_squared = -Rational(n) * q.coeff(n) / (4 * q.coeff(n - 2));
  w.scale = q.coeff(n) / rational_pow(2, n - 1);
  w.shift = q.coeff(0) - w.scale * scaled_chebyshev(n, w.inner_scale_squared).coeff(0);
  if (reconstruct(w) != p)
    return std::nullopt;
  return w;
}

} // namespace

FactorClass classify_factor(const ExactPolynomial &p)
{
  FactorClass out;
  out.factor = p;
  if (p.degree() < 1)
    throw Error(ErrorKind::InvalidInput, "factor must be nonconstant");
  if (p.degree() >= 2)
    out.datum = critical_datum(p).datum;
  if (p.degree() <= 4) {
    out.tag = FactorTag::Degree4OrLess;
    return out;
  }
  if (decompose_poly(p).size() > 1)
    throw Error(ErrorKind::NotIndecomposable, "factor " + p.to_string() + " is decomposable");

  const DatumClass cls = classify_datum(*out.datum);
  if (cls.tag == DatumTag::PowerNN) {
    if ((out.power = power_witness(p)))
      out.tag = FactorTag::PowerLike;
  } else if (cls.tag == DatumTag::Dihedral22N &&
             cls.param == static_cast<std::uint64_t>(p.degree())) {
    if ((out.chebyshev = chebyshev_witness(p)))
      out.tag = FactorTag::ChebyshevLike;
  }
  return out;
}

RadicalExpr invert_factor(const FactorClass &factor, const RadicalExpr &t)
{
  const auto k = [](const Rational &q) { return RadicalExpr::constant(q); };
  switch (factor.tag) {
  case FactorTag::PowerLike: {
    const PowerWitness &w = *factor.power;
    return k(w.center) + invert_power(w.n, (t - k(w.shift)) / k(w.scale));
  }
  case FactorTag::ChebyshevLike: {
    const ChebyshevWitness &w = *factor.chebyshev;
    const Rational &s = w.inner_scale_squared;
    RadicalExpr c, c_to_n;
    if (auto exact = rational_sqrt(s)) {
      c = k(*exact);
      c_to_n = k(rational_pow(*exact, w.n));
    } else {
      c = RadicalExpr::root(2, k(s));
      c_to_n = w.n % 2 == 0 ? k(rational_pow(s, w.n / 2)) : k(rational_pow(s, w.n / 2)) * c;
    }
    const RadicalExpr target = (t - k(w.shift)) * c_to_n / k(w.scale);
    return k(w.center) + invert_chebyshev(w.n, target) / c;
  }
  case FactorTag::Degree4OrLess:
    switch (factor.factor.degree()) {
    case 1: return linear_radical(factor.factor, t);
    case 2: return quadratic_radical(factor.factor, t);
    case 3: return cubic_radical(factor.factor, t);
    default: return quartic_radical(factor.factor, t);
    }
  case FactorTag::Obstructed: break;
  }
  throw Error(ErrorKind::InvalidInput, "obstructed factor has no radical inverse");
}

RittVerdict ritt_verdict(const ExactPolynomial &p)
{
  RittVerdict verdict;
  for (const auto &factor : decompose_poly(p))
    verdict.factors.push_back(classify_factor(factor));
  verdict.invertible = std::none_of(verdict.factors.begin(), verdict.factors.end(),
                                    [](const FactorClass &f) { return f.tag == FactorTag::Obstructed; });
  if (verdict.invertible) {
    RadicalExpr inverse = RadicalExpr::variable();
    for (const auto &factor : verdict.factors)
      inverse = invert_factor(factor, inverse);
    verdict.inverse = inverse;
  }
  return verdict;
}

namespace {

std::vector<Complex> fiber(const ExactPolynomial &p, Complex w)
{
  const int n = p.degree();
  Eigen::VectorXcd coeffs(n + 1);
  for (int i = 0; i <= n; ++i)
    coeffs[i] = to_double(p.coeff(static_cast<std::size_t>(i)));
  coeffs[0] -= w;
  Eigen::PolynomialSolver<std::complex<double>, Eigen::Dynamic> solver(coeffs);
  std::vector<Complex> roots(solver.roots().begin(), solver.roots().end());
  const ExactPolynomial dp = p.derivative();
  for (Complex &z : roots)
    for (int it = 0; it < 10; ++it)
      z -= (p.eval(z) - w) / dp.eval(z);
  return roots;
}

double distance_to_segment(Complex x, Complex a, Complex b)
{
  const Complex ab = b - a;
  const double t = std::clamp(std::real((x - a) * std::conj(ab)) / std::norm(ab), 0.0, 1.0);
  return std::abs(x - (a + t * ab));
}

// Follows the fiber along the path; false when Newton fails to converge.
bool track(const ExactPolynomial &p, const ExactPolynomial &dp, const std::vector<Complex> &path,
           std::vector<Complex> &z)
{
  for (std::size_t s = 1; s < path.size(); ++s)
    for (Complex &x : z) {
      bool converged = false;
      for (int it = 0; it < 30; ++it) {
        const Complex step = (p.eval(x) - path[s]) / dp.eval(x);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
          return false;
        x -= step;
        if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(x))) {
          converged = true;
          break;
        }
      }
      if (!converged)
        return false;
    }
  return true;
}

} // namespace

NumericMonodromy numeric_monodromy(const ExactPolynomial &p)
{
  const CriticalDatum cd = critical_datum(p);
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::vector<Complex> &vals = cd.values;
  const std::size_t m = vals.size();

  double dmin = 0, spread = 0;
  Complex centroid = 0;
  for (const Complex &v : vals)
    centroid += v / static_cast<double>(m);
  for (const Complex &v : vals)
    spread = std::max(spread, std::abs(v - centroid));
  dmin = m > 1 ? std::numeric_limits<double>::max() : std::max(1.0, spread);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      dmin = std::min(dmin, std::abs(vals[i] - vals[j]));
  const double rho = dmin / 4;

  // Base point with the largest clearance between its segments and the other values.
  Complex base = 0;
  double best_clearance = -1;
  for (double factor : {0.0, 0.35, 0.7, 1.2, 2.0, 3.5}) {
    const double radius = factor * (spread + rho) + (factor == 0.0 ? rho * 0.37 : 0.0);
    for (int a = 0; a < 97; ++a) {
      const Complex candidate = centroid + radius * std::polar(1.0, -std::numbers::pi / 2 + 0.137 + 0.0647 * a);
      double clearance = std::numeric_limits<double>::max();
      for (std::size_t i = 0; i < m; ++i) {
        clearance = std::min(clearance, std::abs(candidate - vals[i]) / 2);
        for (std::size_t j = 0; j < m; ++j)
          if (i != j)
            clearance = std::min(clearance, distance_to_segment(vals[j], candidate, vals[i]));
      }
      if (clearance > best_clearance) {
        best_clearance = clearance;
        base = candidate;
      }
    }
  }
  if (best_clearance < 1.25 * rho)
    throw Error(ErrorKind::NumericFailure, "no base point with clear segments");

  const std::vector<Complex> start = fiber(p, base);
  const ExactPolynomial dp = p.derivative();

  // Loops in counterclockwise order of direction from the base point.
  std::vector<std::size_t> loop_order(m);
  std::iota(loop_order.begin(), loop_order.end(), 0);
  std::sort(loop_order.begin(), loop_order.end(), [&](std::size_t a, std::size_t b) {
    return std::arg(vals[a] - base) > std::arg(vals[b] - base);
  });

  std::vector<Permutation> loops(m, Permutation::identity(n));
  std::vector<std::size_t> steps_used(m, 0);
  std::vector<char> ok(m, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t li = 0; li < static_cast<std::ptrdiff_t>(m); ++li) {
    const Complex v = vals[static_cast<std::size_t>(li)];
    const Complex dir = (base - v) / std::abs(base - v);
    const Complex entry = v + rho * dir;
    for (std::size_t steps = 720; steps <= 720 * 64 && !ok[li]; steps *= 2) {
      const std::size_t seg = steps / 4, circ = steps - 2 * seg;
      std::vector<Complex> path;
      for (std::size_t s = 0; s <= seg; ++s)
        path.push_back(base + (entry - base) * (static_cast<double>(s) / static_cast<double>(seg)));
      const double theta0 = std::arg(dir);
      for (std::size_t s = 1; s <= circ; ++s)
        path.push_back(v + rho * std::polar(1.0, theta0 + 2 * std::numbers::pi *
                                                             static_cast<double>(s) /
                                                             static_cast<double>(circ)));
      for (std::size_t s = 1; s <= seg; ++s)
        path.push_back(entry + (base - entry) * (static_cast<double>(s) / static_cast<double>(seg)));

      std::vector<Complex> z = start;
      if (!track(p, dp, path, z))
        continue;
      std::vector<Point> images(n);
      std::vector<char> hit(n, 0);
      bool bijective = true;
      for (std::size_t i = 0; i < n && bijective; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < n; ++j)
          if (std::abs(z[i] - start[j]) < std::abs(z[i] - start[best]))
            best = j;
        if (hit[best])
          bijective = false;
        hit[best] = 1;
        images[i] = static_cast<Point>(best);
      }
      if (!bijective)
        continue;
      loops[static_cast<std::size_t>(li)] = Permutation(std::move(images));
      steps_used[static_cast<std::size_t>(li)] = steps;
      ok[li] = 1;
    }
  }
  if (std::find(ok.begin(), ok.end(), 0) != ok.end())
    throw Error(ErrorKind::NumericFailure, "a monodromy loop failed to close");

  std::vector<Slot> slots;
  std::vector<Permutation> finite;
  for (std::size_t idx : loop_order) {
    slots.push_back({cd.datum.entries()[idx].point, loops[idx]});
    finite.push_back(loops[idx]);
  }
  slots.push_back({"inf", product(finite).inverse()});
  return {Constellation(n, std::move(slots)), base,
          *std::max_element(steps_used.begin(), steps_used.end())};
}

} // namespace ramified
