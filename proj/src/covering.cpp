#include "ramified/covering.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ramified/error.hpp"

namespace ramified {

std::optional<std::string> constellation_defect(std::size_t degree,
                                                const std::vector<Slot> &slots)
{
  if (degree == 0)
    return "degree must be at least 1";
  std::set<std::string> seen;
  for (const auto &slot : slots) {
    if (slot.perm.degree() != degree)
      return "slot '" + slot.point + "' has degree " + std::to_string(slot.perm.degree());
    if (!seen.insert(slot.point).second)
      return "duplicate point label '" + slot.point + "'";
  }
  std::vector<Permutation> perms;
  for (const auto &slot : slots)
    perms.push_back(slot.perm);
  if (!perms.empty() && !product(perms).is_identity())
    return "product of slot permutations is not the identity";
  if (!is_transitive(degree, perms))
    return "slot permutations do not act transitively";
  return std::nullopt;
}

Constellation::Constellation(std::size_t degree, std::vector<Slot> slots)
  : degree_(degree), slots_(std::move(slots))
{
  if (auto defect = constellation_defect(degree_, slots_))
    throw Error(ErrorKind::InvalidConstellation, *defect);
}

std::vector<std::string> Constellation::labels() const
{
  std::vector<std::string> out;
  for (const auto &slot : slots_)
    out.push_back(slot.point);
  return out;
}

std::vector<Permutation> Constellation::perms() const
{
  std::vector<Permutation> out;
  for (const auto &slot : slots_)
    out.push_back(slot.perm);
  return out;
}

BranchingDatum::BranchingDatum(std::vector<DatumEntry> entries) : entries_(std::move(entries))
{
  std::set<std::string> seen;
  for (const auto &e : entries_) {
    if (e.order < 2)
      throw Error(ErrorKind::InvalidDatum, "order at '" + e.point + "' is below 2");
    if (!seen.insert(e.point).second)
      throw Error(ErrorKind::InvalidDatum, "duplicate point label '" + e.point + "'");
  }
}

std::optional<std::uint64_t> BranchingDatum::order_at(const std::string &point) const
{
  for (const auto &e : entries_)
    if (e.point == point)
      return e.order;
  return std::nullopt;
}

std::vector<std::uint64_t> BranchingDatum::sorted_orders() const
{
  std::vector<std::uint64_t> orders;
  for (const auto &e : entries_)
    orders.push_back(e.order);
  std::sort(orders.begin(), orders.end());
  return orders;
}

BranchingDatum datum_from_orders(std::span<const std::uint64_t> orders)
{
  std::vector<DatumEntry> entries;
  for (std::size_t i = 0; i < orders.size(); ++i)
    entries.push_back({"p" + std::to_string(i + 1), orders[i]});
  return BranchingDatum(std::move(entries));
}

DatumReport branching_datum(const Constellation &c)
{
  DatumReport report;
  std::vector<DatumEntry> entries;
  for (const auto &slot : c.slots()) {
    CycleData data = cycle_data(slot.perm);
    report.passport.push_back(data.cycle_type);
    if (data.order > 1)
      entries.push_back({slot.point, data.order});
  }
  report.datum = BranchingDatum(std::move(entries));
  return report;
}

long genus_rh(const Constellation &c)
{
  // 2 - 2g = 2n - sum over slots of (n - #cycles)
  const long n = static_cast<long>(c.degree());
  long euler = 2 * n;
  for (const auto &slot : c.slots())
    euler -= n - static_cast<long>(cycle_count(slot.perm));
  if ((2 - euler) % 2 != 0)
    throw Error(ErrorKind::NonIntegerGenus, "Riemann-Hurwitz gives a non-integer genus");
  long genus = (2 - euler) / 2;
  if (genus < 0)
    throw Error(ErrorKind::NegativeGenus, "Riemann-Hurwitz gives a negative genus");
  return genus;
}

bool is_subject_to(const Constellation &c, const BranchingDatum &d)
{
  for (const auto &slot : c.slots()) {
    auto order = d.order_at(slot.point);
    if (!order) {
      if (!slot.perm.is_identity())
        return false;
      continue;
    }
    for (const auto &cycle : cycles(slot.perm))
      if (*order % cycle.size() != 0)
        return false;
  }
  return true;
}

Rational galois_rh_genus(std::uint64_t n, std::span<const std::uint64_t> orders)
{
  Rational total = 0;
  for (std::uint64_t b : orders)
    total += Rational(1) - Rational(1, static_cast<unsigned long>(b));
  Rational genus = Rational(1) - Rational(static_cast<unsigned long>(n), 2u) * (Rational(2) - total);
  genus.canonicalize();
  return genus;
}

Constellation relabel_sheets(const Constellation &c, const Permutation &relabel)
{
  const Permutation back = relabel.inverse();
  std::vector<Slot> slots;
  for (const auto &slot : c.slots())
    slots.push_back({slot.point, compose(compose(back, slot.perm), relabel)});
  return Constellation(c.degree(), std::move(slots));
}

std::vector<std::string> merge_labels(const std::vector<std::string> &a,
                                      const std::vector<std::string> &b)
{
  auto contains = [](const std::vector<std::string> &v, const std::string &s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  std::vector<std::string> merged;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      merged.push_back(a[i]);
      ++i;
      ++j;
    } else if (j < b.size() && !contains(a, b[j])) {
      merged.push_back(b[j++]);
    } else if (i < a.size() && !contains(b, a[i])) {
      merged.push_back(a[i++]);
    } else {
      throw Error(ErrorKind::LabelMismatch, "shared point labels appear in different orders");
    }
  }
  return merged;
}

Constellation pad_to_labels(const Constellation &c, const std::vector<std::string> &labels)
{
  std::vector<Slot> slots;
  std::size_t next = 0;
  for (const auto &label : labels) {
    if (next < c.size() && c.slots()[next].point == label) {
      slots.push_back(c.slots()[next++]);
    } else {
      slots.push_back({label, Permutation::identity(c.degree())});
    }
  }
  if (next != c.size())
    throw Error(ErrorKind::LabelMismatch, "constellation labels are not a subsequence of the target labels");
  return Constellation(c.degree(), std::move(slots));
}

} // namespace ramified
