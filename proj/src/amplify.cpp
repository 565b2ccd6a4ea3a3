#include "ramified/amplify.hpp"

#include <cstdlib>
#include <numeric>

#include "ramified/error.hpp"
#include "ramified/rational.hpp"

namespace ramified {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void append_reduced(Word &word, int letter)
{
  if (!word.empty() && word.back() == -letter)
    word.pop_back();
  else
    word.push_back(letter);
}

Word inverse_word(const Word &w)
{
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(-*it);
  return out;
}

struct Walker {
  const std::vector<Permutation> &forward;
  const std::vector<Permutation> &backward;
  const std::vector<std::size_t> &generator_of;  // sheet * (k-1) + slot -> index or kNone
  std::size_t rank;                              // k - 1

  // Reidemeister rewriting of a slot word read from `start`.
  Word rewrite(const Word &word, Point start, Point *end = nullptr) const
  {
    Word out;
    Point y = start;
    for (int letter : word) {
      const std::size_t s = static_cast<std::size_t>(std::abs(letter)) - 1;
      if (letter > 0) {
        const std::size_t g = generator_of[y * rank + s];
        if (g != kNone)
          append_reduced(out, static_cast<int>(g) + 1);
        y = forward[s][y];
      } else {
        const Point z = backward[s][y];
        const std::size_t g = generator_of[z * rank + s];
        if (g != kNone)
          append_reduced(out, -(static_cast<int>(g) + 1));
        y = z;
      }
    }
    if (end)
      *end = y;
    return out;
  }
};

} // namespace

SchreierData schreier_data(const Constellation &c)
{
  if (genus_rh(c) < 1)
    throw Error(ErrorKind::GenusTooSmall, "base constellation has genus 0");
  const std::size_t n = c.degree();
  const std::size_t k = c.size();
  const std::size_t rank = k - 1;

  std::vector<Permutation> forward, backward;
  for (std::size_t s = 0; s < rank; ++s) {
    forward.push_back(c.slots()[s].perm);
    backward.push_back(c.slots()[s].perm.inverse());
  }

  // Shortlex BFS over x1, X1, x2, X2, ...
  std::vector<Word> transversal(n);
  std::vector<char> reached(n, 0);
  std::vector<char> tree(n * rank, 0);
  std::vector<Point> queue{0};
  reached[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point x = queue[head];
    for (std::size_t s = 0; s < rank; ++s)
      for (int sign : {1, -1}) {
        const Point y = sign > 0 ? forward[s][x] : backward[s][x];
        if (reached[y])
          continue;
        reached[y] = 1;
        transversal[y] = transversal[x];
        transversal[y].push_back(sign * static_cast<int>(s + 1));
        tree[(sign > 0 ? x : y) * rank + s] = 1;
        queue.push_back(y);
      }
  }

  SchreierData data{c, transversal, {}, {}, {}};
  std::vector<std::size_t> generator_of(n * rank, kNone);
  for (Point x = 0; x < n; ++x)
    for (std::size_t s = 0; s < rank; ++s) {
      if (tree[x * rank + s])
        continue;
      generator_of[x * rank + s] = data.generators.size();
      data.generators.push_back({x, s});
      Word w = transversal[x];
      append_reduced(w, static_cast<int>(s + 1));
      for (int letter : inverse_word(transversal[forward[s][x]]))
        append_reduced(w, letter);
      data.generator_words.push_back(std::move(w));
    }

  const Walker walker{forward, backward, generator_of, rank};
  Word last_slot;
  for (std::size_t s = rank; s-- > 0;)
    last_slot.push_back(-static_cast<int>(s + 1));
  for (std::size_t s = 0; s < k; ++s) {
    const Word step = s < rank ? Word{static_cast<int>(s + 1)} : last_slot;
    for (const auto &cycle : cycles(c.slots()[s].perm)) {
      Word power;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        power.insert(power.end(), step.begin(), step.end());
      // The transversal prefix and suffix only cross tree edges.
      data.punctures.push_back({s, cycle.front(), cycle.size(), walker.rewrite(power, cycle.front())});
    }
  }
  return data;
}

namespace {

// A primitive integer vector in the nullspace of the abelianized puncture
// relations, or empty if the nullspace is zero.
std::vector<mpz_class> primitive_kernel_vector(const SchreierData &data)
{
  const std::size_t cols = data.generators.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto &p : data.punctures) {
    std::vector<Rational> row(cols, 0);
    for (int letter : p.word)
      row[static_cast<std::size_t>(std::abs(letter)) - 1] += letter > 0 ? 1 : -1;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[r], rows[pivot]);
    const Rational lead = rows[r][col];
    for (auto &v : rows[r])
      v /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0)
        continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] -= factor * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<char> is_pivot(cols, 0);
  for (auto col : pivot_col)
    is_pivot[col] = 1;
  std::size_t free_col = kNone;
  for (std::size_t col = 0; col < cols; ++col)
    if (!is_pivot[col]) {
      free_col = col;
      break;
    }
  if (free_col == kNone)
    return {};

  std::vector<Rational> v(cols, 0);
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    v[pivot_col[i]] = -rows[i][free_col];

  mpz_class common = 1;
  for (const auto &x : v)
    common = lcm(common, mpz_class(x.get_den()));
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto &x : v) {
    out.push_back(mpz_class(x.get_num() * (common / x.get_den())));
    g = gcd(g, out.back());
  }
  for (auto &x : out)
    x /= g;
  return out;
}

} // namespace

Constellation cyclic_unbranched_extension(const Constellation &c, std::uint64_t d)
{
  if (d < 2)
    throw Error(ErrorKind::InvalidInput, "d must be at least 2");
  const SchreierData data = schreier_data(c);
  const auto phi = primitive_kernel_vector(data);
  if (phi.empty())
    throw Error(ErrorKind::NoSurjection,
                "every puncture-killing homomorphism is trivial (image order 1)");

  const std::size_t n = c.degree();
  const std::size_t k = c.size();
  const mpz_class dz(static_cast<unsigned long>(d));
  std::vector<std::uint64_t> shift(n * (k - 1), 0);
  for (std::size_t g = 0; g < data.generators.size(); ++g) {
    mpz_class value = phi[g] % dz;
    if (value < 0)
      value += dz;
    shift[data.generators[g].sheet * (k - 1) + data.generators[g].slot] = value.get_ui();
  }

  std::vector<Slot> slots;
  std::vector<Permutation> lifted;
  for (std::size_t s = 0; s + 1 < k; ++s) {
    std::vector<Point> images(n * d);
    for (Point x = 0; x < n; ++x)
      for (std::uint64_t r = 0; r < d; ++r)
        images[x * d + r] =
          static_cast<Point>(c.slots()[s].perm[x] * d + (r + shift[x * (k - 1) + s]) % d);
    lifted.emplace_back(std::move(images));
    slots.push_back({c.slots()[s].point, lifted.back()});
  }
  slots.push_back({c.slots().back().point, product(lifted).inverse()});
  if (auto defect = constellation_defect(n * d, slots))
    throw Error(ErrorKind::NoSurjection, "composite is disconnected: " + *defect);
  return Constellation(n * d, std::move(slots));
}

} // namespace ramified
