#include "ramified/galois.hpp"

#include <algorithm>
#include <map>

#include "ramified/error.hpp"

namespace ramified {

GroupTable monodromy_group(const Constellation &c, std::size_t cap)
{
  const auto perms = c.perms();
  return generate_group(c.degree(), perms, cap);
}

bool is_galois(const Constellation &c, std::size_t cap)
{
  return monodromy_group(c, cap).order == c.degree();
}

Constellation regular_constellation(const std::vector<Slot> &slots, std::size_t degree,
                                    std::size_t cap)
{
  std::vector<Permutation> gens;
  for (const auto &slot : slots)
    gens.push_back(slot.perm);
  const GroupTable group = generate_group(degree, gens, cap);

  std::vector<Slot> regular;
  for (const auto &slot : slots) {
    std::vector<Point> images(group.order);
    for (std::size_t i = 0; i < group.order; ++i)
      images[i] = static_cast<Point>(group.index_of(compose(group.elements[i], slot.perm)));
    regular.push_back({slot.point, Permutation(std::move(images))});
  }
  return Constellation(group.order, std::move(regular));
}

Constellation galois_closure(const Constellation &c, std::size_t cap)
{
  return regular_constellation(c.slots(), c.degree(), cap);
}

std::vector<FiberedComponent> fibered_product(const Constellation &c1, const Constellation &c2)
{
  const auto labels = merge_labels(c1.labels(), c2.labels());
  const Constellation a = pad_to_labels(c1, labels);
  const Constellation b = pad_to_labels(c2, labels);
  const std::size_t n1 = a.degree(), n2 = b.degree();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);

  std::vector<std::size_t> component_of(n1 * n2, unassigned);
  std::vector<FiberedComponent> components;
  for (std::size_t start = 0; start < n1 * n2; ++start) {
    if (component_of[start] != unassigned)
      continue;
    // Collect the orbit, then number its points in increasing pair order.
    std::vector<std::size_t> orbit_pairs{start};
    component_of[start] = components.size();
    for (std::size_t head = 0; head < orbit_pairs.size(); ++head) {
      const std::size_t pair = orbit_pairs[head];
      for (std::size_t s = 0; s < labels.size(); ++s) {
        const Point i = a.slots()[s].perm[static_cast<Point>(pair / n2)];
        const Point j = b.slots()[s].perm[static_cast<Point>(pair % n2)];
        const std::size_t next = i * n2 + j;
        if (component_of[next] == unassigned) {
          component_of[next] = components.size();
          orbit_pairs.push_back(next);
        }
      }
    }
    std::sort(orbit_pairs.begin(), orbit_pairs.end());
    std::map<std::size_t, Point> local;
    for (std::size_t k = 0; k < orbit_pairs.size(); ++k)
      local[orbit_pairs[k]] = static_cast<Point>(k);

    std::vector<Slot> slots;
    for (std::size_t s = 0; s < labels.size(); ++s) {
      std::vector<Point> images(orbit_pairs.size());
      for (std::size_t k = 0; k < orbit_pairs.size(); ++k) {
        const Point i = a.slots()[s].perm[static_cast<Point>(orbit_pairs[k] / n2)];
        const Point j = b.slots()[s].perm[static_cast<Point>(orbit_pairs[k] % n2)];
        images[k] = local.at(i * n2 + j);
      }
      slots.push_back({labels[s], Permutation(std::move(images))});
    }
    std::vector<std::pair<Point, Point>> points;
    for (std::size_t pair : orbit_pairs)
      points.emplace_back(static_cast<Point>(pair / n2), static_cast<Point>(pair % n2));
    components.push_back({Constellation(orbit_pairs.size(), std::move(slots)), std::move(points)});
  }
  return components;
}

namespace {

std::vector<std::size_t> cycle_length_at(const Permutation &p)
{
  std::vector<std::size_t> length(p.degree());
  for (const auto &cycle : cycles(p))
    for (Point x : cycle)
      length[x] = cycle.size();
  return length;
}

} // namespace

bool projects_unbranched(const FiberedComponent &component, const Constellation &target)
{
  const auto labels = component.cover.labels();
  const Constellation padded = pad_to_labels(target, labels);
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const auto upstairs = cycle_length_at(component.cover.slots()[s].perm);
    const auto downstairs = cycle_length_at(padded.slots()[s].perm);
    for (std::size_t w = 0; w < component.points.size(); ++w)
      if (upstairs[w] != downstairs[component.points[w].second])
        return false;
  }
  return true;
}

bool dominates(const Constellation &c1, const Constellation &c2)
{
  const auto labels = merge_labels(c1.labels(), c2.labels());
  const Constellation a = pad_to_labels(c1, labels);
  const Constellation b = pad_to_labels(c2, labels);
  if (a.degree() % b.degree() != 0)
    return false;

  constexpr Point unset = static_cast<Point>(-1);
  // phi is fixed by phi(0) because c1 is transitive; its image is closed
  // under c2's slots, so it is onto as well.
  for (Point seed = 0; seed < b.degree(); ++seed) {
    std::vector<Point> phi(a.degree(), unset);
    phi[0] = seed;
    std::vector<Point> queue{0};
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      const Point x = queue[head];
      for (std::size_t s = 0; s < labels.size(); ++s) {
        const Point x_next = a.slots()[s].perm[x];
        const Point y_next = b.slots()[s].perm[phi[x]];
        if (phi[x_next] == unset) {
          phi[x_next] = y_next;
          queue.push_back(x_next);
        } else if (phi[x_next] != y_next) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent)
      return true;
  }
  return false;
}

} // namespace ramified
