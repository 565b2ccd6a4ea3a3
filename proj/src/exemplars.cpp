#include "ramified/exemplars.hpp"

#include <array>
#include <functional>
#include <string>

#include "ramified/error.hpp"
#include "ramified/galois.hpp"

namespace ramified {

namespace {

using Mul = std::function<std::size_t(std::size_t, std::size_t)>;

std::vector<std::string> default_labels(std::size_t count)
{
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < count; ++i)
    labels.push_back("p" + std::to_string(i + 1));
  return labels;
}

Permutation right_multiplication(std::size_t order, std::size_t g, const Mul &mul)
{
  std::vector<Point> images(order);
  for (std::size_t i = 0; i < order; ++i)
    images[i] = static_cast<Point>(mul(i, g));
  return Permutation(std::move(images));
}

Constellation regular_from_elements(std::size_t order, const std::vector<std::size_t> &slot_elements,
                                    const Mul &mul)
{
  const auto labels = default_labels(slot_elements.size());
  std::vector<Slot> slots;
  for (std::size_t s = 0; s < slot_elements.size(); ++s)
    slots.push_back({labels[s], right_multiplication(order, slot_elements[s], mul)});
  return Constellation(order, std::move(slots));
}

Constellation power_exemplar(std::uint64_t n)
{
  const auto mul = [n](std::size_t a, std::size_t b) { return (a + b) % n; };
  return regular_from_elements(n, {1, n - 1}, mul);
}

Constellation dihedral_exemplar(std::uint64_t n)
{
  // (e, k) is z -> (-1)^e z + k, encoded e*n + k.
  const auto mul = [n](std::size_t a, std::size_t b) {
    const std::size_t e1 = a / n, k1 = a % n, e2 = b / n, k2 = b % n;
    const std::size_t k = ((e2 == 0 ? k1 : n - k1) + k2) % n;
    return ((e1 + e2) % 2) * n + k;
  };
  const std::size_t x1 = n, x2 = n + 1;
  const std::size_t x3 = n - 1;  // (x1 x2)^-1 = z -> z - 1
  return regular_from_elements(2 * n, {x1, x2, x3}, mul);
}

Constellation platonic_exemplar(DatumTag family)
{
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::uint64_t product_order = 0;
  switch (family) {
  case DatumTag::Tetra233:
    degree = 4;
    gens = {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{1, 2, 3}})};
    product_order = 3;
    break;
  case DatumTag::Octa234:
    degree = 4;
    gens = {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})};
    product_order = 4;
    break;
  default:
    degree = 5;
    gens = {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
    product_order = 5;
    break;
  }
  const GroupTable group = generate_group(degree, gens);
  for (const auto &x : group.elements) {
    if (cycle_data(x).order != 2)
      continue;
    for (const auto &y : group.elements) {
      if (cycle_data(y).order != 3)
        continue;
      const Permutation xy = compose(x, y);
      if (cycle_data(xy).order != product_order)
        continue;
      const std::array<Permutation, 2> pair{x, y};
      if (generate_group(degree, pair).order != group.order)
        continue;
      const auto labels = default_labels(3);
      std::vector<Slot> slots{{labels[0], x}, {labels[1], y}, {labels[2], xy.inverse()}};
      return regular_constellation(slots, degree);
    }
  }
  throw Error(ErrorKind::UnrealizableParam, "no generating pair found");
}

using Matrix2 = std::array<long long, 4>;  // row-major

Matrix2 unit_matrix(std::uint64_t k)
{
  switch (k) {
  case 2: return {-1, 0, 0, -1};
  case 3: return {0, -1, 1, -1};
  case 4: return {0, -1, 1, 0};
  default: return {0, 1, -1, 1};  // order 6: negative of the order-3 unit
  }
}

Constellation torus_exemplar(DatumTag family, std::uint64_t m)
{
  const std::uint64_t k = torus_multiplier_order(family);
  const std::size_t module_size = m * m;
  const std::size_t order = k * module_size;
  const long long mm = static_cast<long long>(m);

  // powers[j] = A^j reduced mod m
  std::vector<Matrix2> powers{{1, 0, 0, 1}};
  const Matrix2 unit = unit_matrix(k);
  for (std::uint64_t j = 1; j < k; ++j) {
    const Matrix2 &p = powers.back();
    Matrix2 next{p[0] * unit[0] + p[1] * unit[2], p[0] * unit[1] + p[1] * unit[3],
                 p[2] * unit[0] + p[3] * unit[2], p[2] * unit[1] + p[3] * unit[3]};
    for (auto &entry : next)
      entry = ((entry % mm) + mm) % mm;
    powers.push_back(next);
  }

  // (j, b) is z -> A^j z + b, encoded j*m^2 + b0*m + b1.
  const auto mul = [&](std::size_t a, std::size_t b) {
    const std::size_t j1 = a / module_size, j2 = b / module_size;
    const long long u0 = static_cast<long long>((a % module_size) / m);
    const long long u1 = static_cast<long long>(a % m);
    const long long v0 = static_cast<long long>((b % module_size) / m);
    const long long v1 = static_cast<long long>(b % m);
    const Matrix2 &p = powers[j2];
    const long long w0 = (p[0] * u0 + p[1] * u1 + v0) % mm;
    const long long w1 = (p[2] * u0 + p[3] * u1 + v1) % mm;
    return ((j1 + j2) % k) * module_size + static_cast<std::size_t>(w0) * m +
           static_cast<std::size_t>(w1);
  };
  const auto element = [&](std::uint64_t j, std::size_t b) { return j * module_size + b; };
  const auto inverse = [&](std::size_t g) {
    for (std::size_t h = 0; h < order; ++h)
      if (mul(g, h) == 0)
        return h;
    return std::size_t{0};
  };
  const auto generates = [&](const std::vector<std::size_t> &gens) {
    std::vector<char> seen(order, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::size_t g : gens) {
        const std::size_t next = mul(queue[head], g);
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    return queue.size() == order;
  };

  if (family == DatumTag::Torus2222) {
    // z -> -z + b_i with b = (0, e1, e1 + e2, e2); the alternating sum vanishes.
    const std::size_t e1 = m > 1 ? m : 0, e2 = m > 1 ? 1 : 0;
    const std::size_t e12 = m > 1 ? m + 1 : 0;
    std::vector<std::size_t> slot_elements{element(1, 0), element(1, e1), element(1, e12),
                                           element(1, e2)};
    if (!generates(slot_elements))
      throw Error(ErrorKind::UnrealizableParam, "translations do not generate the module");
    return regular_from_elements(order, slot_elements, mul);
  }

  std::uint64_t j1 = 0, j2 = 0;
  switch (family) {
  case DatumTag::Torus236: j1 = 3, j2 = 4; break;
  case DatumTag::Torus333: j1 = 1, j2 = 1; break;
  default: j1 = 2, j2 = 1; break;  // Torus244
  }
  for (std::size_t b1 = 0; b1 < module_size; ++b1)
    for (std::size_t b2 = 0; b2 < module_size; ++b2) {
      const std::size_t g1 = element(j1, b1), g2 = element(j2, b2);
      if (!generates({g1, g2}))
        continue;
      return regular_from_elements(order, {g1, g2, inverse(mul(g1, g2))}, mul);
    }
  throw Error(ErrorKind::UnrealizableParam,
              "no generating pair for modulus " + std::to_string(m));
}

} // namespace

std::uint64_t torus_multiplier_order(DatumTag family) noexcept
{
  switch (family) {
  case DatumTag::Torus236: return 6;
  case DatumTag::Torus333: return 3;
  case DatumTag::Torus244: return 4;
  case DatumTag::Torus2222: return 2;
  default: return 0;
  }
}

std::uint64_t exemplar_group_order(const ExemplarSpec &spec)
{
  switch (spec.family) {
  case DatumTag::PowerNN: return spec.param;
  case DatumTag::Dihedral22N: return 2 * spec.param;
  case DatumTag::Tetra233: return 12;
  case DatumTag::Octa234: return 24;
  case DatumTag::Icosa235: return 60;
  case DatumTag::Other: return 0;
  default: return torus_multiplier_order(spec.family) * spec.param * spec.param;
  }
}

Constellation exemplar(const ExemplarSpec &spec)
{
  switch (spec.family) {
  case DatumTag::PowerNN:
  case DatumTag::Dihedral22N:
    if (spec.param < 2)
      throw Error(ErrorKind::UnrealizableParam, "n must be at least 2");
    return spec.family == DatumTag::PowerNN ? power_exemplar(spec.param)
                                            : dihedral_exemplar(spec.param);
  case DatumTag::Tetra233:
  case DatumTag::Octa234:
  case DatumTag::Icosa235:
    return platonic_exemplar(spec.family);
  case DatumTag::Torus236:
  case DatumTag::Torus333:
  case DatumTag::Torus244:
  case DatumTag::Torus2222:
    if (spec.param < 1)
      throw Error(ErrorKind::UnrealizableParam, "m must be at least 1");
    return torus_exemplar(spec.family, spec.param);
  case DatumTag::Other:
    break;
  }
  throw Error(ErrorKind::UnrealizableParam, "Other has no exemplar");
}

} // namespace ramified
