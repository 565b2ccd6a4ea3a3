#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "ramified/classify.hpp"
#include "ramified/covering.hpp"
#include "ramified/perm.hpp"
#include "ramified/polynomial.hpp"

namespace test_support {

using namespace ramified;
using Rng = std::mt19937_64;

inline Permutation random_permutation(Rng &rng, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

// Uniform over set partitions it is not; every cycle length divides `order`.
inline Permutation random_permutation_dividing(Rng &rng, std::size_t degree, std::uint64_t order)
{
  std::vector<Point> points(degree);
  std::iota(points.begin(), points.end(), Point{0});
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<std::size_t> lengths;
  for (std::size_t l = 1; l <= degree; ++l)
    if (order % l == 0)
      lengths.push_back(l);
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  while (pos < degree) {
    std::vector<std::size_t> fits;
    for (std::size_t l : lengths)
      if (pos + l <= degree)
        fits.push_back(l);
    const std::size_t l = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
    cycles.emplace_back(points.begin() + static_cast<std::ptrdiff_t>(pos),
                        points.begin() + static_cast<std::ptrdiff_t>(pos + l));
    pos += l;
  }
  return Permutation::from_cycles(degree, cycles);
}

inline std::vector<std::string> labels(std::size_t k)
{
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i)
    out.push_back("p" + std::to_string(i + 1));
  return out;
}

inline Constellation close_up(std::size_t degree, std::vector<Permutation> perms)
{
  perms.push_back(product(perms).inverse());
  std::vector<Slot> slots;
  const auto names = labels(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    slots.push_back({names[i], perms[i]});
  return Constellation(degree, std::move(slots));
}

// Random transitive constellation with k slots, the last forced by the product.
inline Constellation random_constellation(Rng &rng, std::size_t degree, std::size_t k)
{
  for (;;) {
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i + 1 < k; ++i)
      perms.push_back(random_permutation(rng, degree));
    if (is_transitive(degree, perms))
      return close_up(degree, std::move(perms));
  }
}

// Rejection sampler for constellations subject to `orders` at p1, p2, ...
inline std::optional<Constellation> random_subject(Rng &rng, std::size_t degree,
                                                   const std::vector<std::uint64_t> &orders,
                                                   std::size_t attempts)
{
  for (std::size_t a = 0; a < attempts; ++a) {
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i + 1 < orders.size(); ++i)
      perms.push_back(random_permutation_dividing(rng, degree, orders[i]));
    const Permutation last = product(perms).inverse();
    if (orders.back() % cycle_data(last).order != 0)
      continue;
    if (!is_transitive(degree, perms))
      continue;
    return close_up(degree, std::move(perms));
  }
  return std::nullopt;
}

// Weierstrass / Durand-Kerner simultaneous iteration.
inline std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>> &low_to_high)
{
  using C = std::complex<double>;
  const std::size_t n = low_to_high.size() - 1;
  std::vector<C> monic(low_to_high.size());
  for (std::size_t i = 0; i <= n; ++i)
    monic[i] = low_to_high[i] / low_to_high[n];
  auto eval = [&](C x) {
    C acc = 0;
    for (std::size_t i = monic.size(); i-- > 0;)
      acc = acc * x + monic[i];
    return acc;
  };
  double bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    bound = std::max(bound, std::abs(monic[i]));
  std::vector<C> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = (1 + bound) * std::pow(C(0.4, 0.9), static_cast<double>(i));
  for (int iter = 0; iter < 5000; ++iter) {
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i)
          denom *= z[i] - z[j];
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15)
      break;
  }
  return z;
}

inline std::vector<std::complex<double>> durand_kerner(const ExactPolynomial &p)
{
  return durand_kerner(p.to_complex());
}

// Largest distance under the best pairing; brute force over permutations.
inline double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b)
{
  if (a.size() != b.size())
    return std::numeric_limits<double>::infinity();
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Rational random_rational(Rng &rng, int num_bound, int den_bound)
{
  const int num = std::uniform_int_distribution<int>(-num_bound, num_bound)(rng);
  const int den = std::uniform_int_distribution<int>(1, den_bound)(rng);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline ExactPolynomial random_monic(Rng &rng, int degree, int num_bound = 9, int den_bound = 4)
{
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i)
    coeffs[static_cast<std::size_t>(i)] = random_rational(rng, num_bound, den_bound);
  coeffs.back() = 1;
  return ExactPolynomial(coeffs);
}

inline Permutation affine(std::uint64_t p, std::uint64_t a, std::uint64_t b)
{
  std::vector<Point> images(p);
  for (std::uint64_t x = 0; x < p; ++x)
    images[x] = static_cast<Point>((a * x + b) % p);
  return Permutation(images);
}

// Every element acts as z -> a z + b, a != 0, after the relabeling.
inline bool is_affine_relabeling(const GroupTable &g, const AffineEmbedding &e)
{
  const std::uint64_t p = g.degree;
  std::vector<Point> point_of(p);
  for (Point x = 0; x < p; ++x)
    point_of[e.relabel[x]] = x;
  for (const auto &elt : g.elements) {
    auto f = [&](std::uint64_t z) { return e.relabel[elt[point_of[z]]]; };
    const std::uint64_t b = f(0), a = (f(1) + p - b) % p;
    if (a == 0)
      return false;
    for (std::uint64_t z = 0; z < p; ++z)
      if (f(z) != (a * z + b) % p)
        return false;
  }
  return true;
}

} // namespace test_support
