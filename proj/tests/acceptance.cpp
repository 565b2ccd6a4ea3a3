// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ramified/amplify.hpp"
#include "ramified/classify.hpp"
#include "ramified/decompose.hpp"
#include "ramified/error.hpp"
#include "ramified/exemplars.hpp"
#include "ramified/galois.hpp"
#include "ramified/radicals.hpp"
#include "support.hpp"

using namespace ramified;
using test_support::Rng;

namespace {

using Orders = std::vector<std::uint64_t>;

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
struct Tally {
  std::size_t checks = 0, failures = 0;
  std::string first;

  void expect(bool cond, const std::string &what)
  {
    ++checks;
    if (cond)
      return;
    if (failures++ < 3)
      first += (first.empty() ? "" : "; ") + what;
  }

  Verdict verdict(const std::string &summary) const
  {
    std::ostringstream os;
    os << summary << ", " << checks << " checks";
    if (failures)
      os << ", " << failures << " failed: " << first;
    return {failures == 0, os.str()};
  }
};

std::string show(const Orders &o)
{
  std::string s = "(";
  for (std::size_t i = 0; i < o.size(); ++i)
    s += (i ? "," : "") + (o[i] == kInfiniteOrder ? std::string("inf") : std::to_string(o[i]));
  return s + ")";
}

Orders orders_of(const Constellation &c)
{
  Orders out;
  for (const auto &e : branching_datum(c).datum.entries())
    out.push_back(e.order);
  return out;
}

std::vector<ExemplarSpec> nine_exemplars()
{
  return {{DatumTag::PowerNN, 6},  {DatumTag::Dihedral22N, 5}, {DatumTag::Tetra233, 1},
          {DatumTag::Octa234, 1},  {DatumTag::Icosa235, 1},    {DatumTag::Torus236, 1},
          {DatumTag::Torus333, 1}, {DatumTag::Torus244, 1},    {DatumTag::Torus2222, 1}};
}

bool is_sphere(DatumTag t)
{
  return t == DatumTag::PowerNN || t == DatumTag::Dihedral22N || t == DatumTag::Tetra233 ||
         t == DatumTag::Octa234 || t == DatumTag::Icosa235;
}

// 2 - 2g = 2n - sum over slots of (n - #cycles), from the cycle decomposition.
long genus_by_cycles(const Constellation &c)
{
  long defect = 0;
  for (const auto &slot : c.slots())
    defect += static_cast<long>(c.degree()) - static_cast<long>(cycles(slot.perm).size());
  return (defect - 2 * static_cast<long>(c.degree()) + 2) / 2;
}

Verdict criterion_1()
{
  Tally t;
  std::set<std::pair<Orders, std::uint64_t>> expected0, got0, expected1, got1;
  for (std::uint64_t n = 2; n <= 60; ++n)
    expected0.insert({{n, n}, n});
  for (std::uint64_t m = 2; 2 * m <= 60; ++m)
    expected0.insert({{2, 2, m}, 2 * m});
  expected0.insert({{2, 3, 3}, 12});
  expected0.insert({{2, 3, 4}, 24});
  expected0.insert({{2, 3, 5}, 60});
  for (std::uint64_t n = 2; n <= 24; ++n) {
    if (n % 6 == 0)
      expected1.insert({{2, 3, 6}, n});
    if (n % 3 == 0)
      expected1.insert({{3, 3, 3}, n});
    if (n % 4 == 0)
      expected1.insert({{2, 4, 4}, n});
    if (n % 2 == 0)
      expected1.insert({{2, 2, 2, 2}, n});
  }
  for (const auto &g : enumerate_galois_data(0, 60))
    got0.insert({g.orders, g.n});
  for (const auto &g : enumerate_galois_data(1, 24))
    got1.insert({g.orders, g.n});
  for (const auto &[o, n] : got0)
    t.expect(expected0.contains({o, n}), "unexpected genus-0 " + show(o) + " n=" + std::to_string(n));
  for (const auto &[o, n] : expected0)
    t.expect(got0.contains({o, n}), "missing genus-0 " + show(o) + " n=" + std::to_string(n));
  for (const auto &[o, n] : got1)
    t.expect(expected1.contains({o, n}), "unexpected genus-1 " + show(o) + " n=" + std::to_string(n));
  for (const auto &[o, n] : expected1)
    t.expect(got1.contains({o, n}), "missing genus-1 " + show(o) + " n=" + std::to_string(n));
  return t.verdict(std::to_string(got0.size()) + " genus-0 and " + std::to_string(got1.size()) + " genus-1 records");
}

Verdict criterion_2()
{
  Tally t;
  const std::set<Orders> expected{{0, 0}, {2, 2, 0}, {2, 3, 6}, {2, 4, 4}, {3, 3, 3}, {2, 2, 2, 2}};
  const auto sols = ritt_equation_solutions();
  t.expect(sols.size() == 6, "count " + std::to_string(sols.size()));
  t.expect(std::set<Orders>(sols.begin(), sols.end()) == expected, "multisets differ");
  return t.verdict(std::to_string(sols.size()) + " solutions");
}

Verdict criterion_3()
{
  Tally t;
  std::vector<ExemplarSpec> specs = nine_exemplars();
  for (std::uint64_t m = 2; m <= 3; ++m)
    for (DatumTag tag : {DatumTag::Torus236, DatumTag::Torus333, DatumTag::Torus244, DatumTag::Torus2222})
      specs.push_back({tag, m});
  for (std::uint64_t n : {2u, 3u, 7u}) {
    specs.push_back({DatumTag::PowerNN, n});
    specs.push_back({DatumTag::Dihedral22N, n});
  }
  for (const auto &spec : specs) {
    const std::string name = std::string(tag_name(spec.family)) + "/" + std::to_string(spec.param);
    const auto g = exemplar(spec);
    std::uint64_t order = 0;
    switch (spec.family) {
    case DatumTag::PowerNN: order = spec.param; break;
    case DatumTag::Dihedral22N: order = 2 * spec.param; break;
    case DatumTag::Tetra233: order = 12; break;
    case DatumTag::Octa234: order = 24; break;
    case DatumTag::Icosa235: order = 60; break;
    default: order = torus_multiplier_order(spec.family) * spec.param * spec.param;
    }
    const auto group = monodromy_group(g);
    t.expect(is_galois(g), name + " not Galois");
    t.expect(classify_datum(branching_datum(g).datum).tag == spec.family, name + " datum");
    t.expect(genus_rh(g) == (is_sphere(spec.family) ? 0 : 1), name + " genus");
    t.expect(group.order == order, name + " order " + std::to_string(group.order));
    t.expect(is_solvable(group) == (spec.family != DatumTag::Icosa235), name + " solvability");
  }
  return t.verdict(std::to_string(specs.size()) + " exemplars");
}

Verdict criterion_4(Rng &rng)
{
  Tally t;
  std::size_t max_order = 0;
  for (int s = 0; s < 200; ++s) {
    const auto c = test_support::random_constellation(rng, 1 + rng() % 8, 2 + rng() % 3);
    try {
      const auto closure = galois_closure(c, 50000);
      max_order = std::max(max_order, closure.degree());
      t.expect(branching_datum(closure).datum == branching_datum(c).datum, "sample " + std::to_string(s));
    } catch (const Error &e) {
      t.expect(false, "sample " + std::to_string(s) + ": " + e.what());
    }
  }
  return t.verdict("200 samples, largest closure degree " + std::to_string(max_order));
}

Verdict criterion_5(Rng &rng)
{
  Tally t;
  std::size_t subject = 0, total = 0;
  for (const auto &spec : nine_exemplars()) {
    const auto g = exemplar(spec);
    const auto datum = branching_datum(g).datum;
    const auto orders = orders_of(g);
    for (int s = 0; s < 50; ++s) {
      std::optional<Constellation> c;
      if (s % 2 == 0)
        c = test_support::random_subject(rng, 1 + rng() % 6, orders, 2000);
      if (!c)
        c = test_support::random_constellation(rng, 1 + rng() % 6, orders.size());
      const bool is_subject = is_subject_to(*c, datum);
      bool unbranched = false;
      for (const auto &component : fibered_product(*c, g))
        unbranched = unbranched || projects_unbranched(component, g);
      subject += is_subject;
      ++total;
      t.expect(is_subject == unbranched, std::string(tag_name(spec.family)) + " sample " + std::to_string(s));
    }
  }
  t.expect(subject > 0 && subject < total, "one side of the equivalence never sampled");
  return t.verdict(std::to_string(total) + " pairs, " + std::to_string(subject) + " subject");
}

Verdict criterion_6(Rng &rng)
{
  Tally t;
  std::size_t samples = 0;
  for (const auto &spec : nine_exemplars()) {
    const auto orders = orders_of(exemplar(spec));
    const long bound = is_sphere(spec.family) ? 0 : 1;
    std::size_t found = 0;
    for (int attempt = 0; attempt < 2000 && found < 60; ++attempt) {
      const auto c = test_support::random_subject(rng, 2 + rng() % 11, orders, 500);
      if (!c)
        continue;
      ++found;
      t.expect(genus_rh(*c) <= bound, "counterexample for " + show(orders));
    }
    t.expect(found > 0, "no samples for " + show(orders));
    samples += found;
  }
  t.expect(samples >= 500, "only " + std::to_string(samples) + " samples");
  return t.verdict(std::to_string(samples) + " samples");
}

Verdict criterion_7()
{
  Tally t;
  std::vector<Slot> slots;
  for (int i = 1; i <= 6; ++i)
    slots.push_back({"p" + std::to_string(i), Permutation({1, 0})});
  const Constellation base(2, slots);
  const auto base_order = monodromy_group(base).order;
  std::string genera;
  for (std::uint64_t d : {2u, 3u, 5u}) {
    const auto ext = cyclic_unbranched_extension(base, d);
    const long g = genus_by_cycles(ext);
    genera += (genera.empty() ? "" : ",") + std::to_string(g);
    t.expect(g == static_cast<long>(d) * (genus_by_cycles(base) - 1) + 1, "formula at d=" + std::to_string(d));
    t.expect(g == std::map<std::uint64_t, long>{{2, 3}, {3, 4}, {5, 6}}.at(d), "genus at d=" + std::to_string(d));
    t.expect(genus_rh(ext) == g, "library genus at d=" + std::to_string(d));
    t.expect(branching_datum(ext).datum == branching_datum(base).datum, "datum at d=" + std::to_string(d));
    const auto order = monodromy_group(ext).order;
    t.expect(order % base_order == 0 && (order / base_order) % d == 0, "order growth at d=" + std::to_string(d));
  }
  return t.verdict("genera " + genera);
}

Verdict criterion_8(Rng &rng)
{
  Tally t;
  double worst = 0;
  for (int s = 0; s < 100; ++s) {
    const auto p = test_support::random_monic(rng, 4);
    try {
      const auto sol = solve_quartic_pencil(p);
      const double dist = test_support::multiset_distance(sol.roots, test_support::durand_kerner(p));
      worst = std::max(worst, dist);
      t.expect(dist < 1e-7, p.to_string());
    } catch (const Error &e) {
      t.expect(false, p.to_string() + ": " + e.what());
    }
  }
  const auto known = solve_quartic_pencil(ExactPolynomial::from_high_to_low({1, 0, -5, 0, 4}));
  std::vector<double> re;
  bool real = true;
  for (const auto &r : known.roots) {
    re.push_back(r.real());
    real = real && r.imag() == 0;
  }
  std::sort(re.begin(), re.end());
  t.expect(real && re == std::vector<double>{-2, -1, 1, 2}, "x^4-5x^2+4 roots");
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst distance %.2e", worst);
  return t.verdict(buf);
}

Verdict criterion_9(Rng &rng)
{
  Tally t;
  double worst = 0;
  std::uniform_real_distribution<double> unit(-1, 1);
  for (unsigned n = 2; n <= 8; ++n) {
    const auto p = chebyshev(n);
    const auto inverse = invert_chebyshev(n, RadicalExpr::variable());
    for (int s = 0; s < 50; ++s) {
      EvalOptions at;
      at.w = Complex(unit(rng), 0);
      double best = std::numeric_limits<double>::infinity();
      for (const Complex &z : eval_multi(inverse, at).values)
        best = std::min(best, std::abs(p.eval(z) - *at.w));
      worst = std::max(worst, best);
      t.expect(best < 1e-8, "n=" + std::to_string(n));
    }
  }
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned n = 1; n <= 6; ++n)
      t.expect(compose(chebyshev(m), chebyshev(n)) == chebyshev(m * n),
               "P" + std::to_string(m) + "(P" + std::to_string(n) + ")");
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst residual %.2e", worst);
  return t.verdict(buf);
}

ExactPolynomial random_linear(Rng &rng)
{
  static const std::vector<Rational> alphas{1, -1, 2, Rational(1, 2), Rational(-3, 2)};
  static const std::vector<Rational> betas{0, 1, -1, Rational(1, 3), Rational(-1, 2)};
  return ExactPolynomial::linear(alphas[rng() % alphas.size()], betas[rng() % betas.size()]);
}

Verdict criterion_10(Rng &rng)
{
  Tally t;
  double worst = 0;
  std::uniform_real_distribution<double> unit(0, 1);
  auto round_trip = [&](const ExactPolynomial &p, const std::string &name) {
    const auto v = ritt_verdict(p);
    t.expect(v.invertible && v.inverse.has_value(), name + " not invertible");
    if (!v.inverse)
      return;
    for (int s = 0; s < 20; ++s) {
      EvalOptions at;
      at.w = std::polar(std::sqrt(unit(rng)), 2 * M_PI * unit(rng));
      double best = std::numeric_limits<double>::infinity();
      try {
        for (const Complex &z : eval_multi(*v.inverse, at).values)
          best = std::min(best, std::abs(p.eval(z) - *at.w));
      } catch (const Error &e) {
        t.expect(false, name + ": " + e.what());
        return;
      }
      worst = std::max(worst, best);
      t.expect(best < 1e-7, name + " round trip");
    }
  };

  t.expect(!ritt_verdict(ExactPolynomial::from_high_to_low({1, 0, 0, 0, -1, 0})).invertible, "z^5-z invertible");
  round_trip(chebyshev(5), "P5");
  round_trip(ExactPolynomial::monomial(1, 5), "z^5");
  for (int s = 0; s < 10; ++s)
    round_trip(test_support::random_monic(rng, 4), "quartic " + std::to_string(s));

  auto random_factor = [&]() {
    switch (rng() % 3) {
    case 0: return ExactPolynomial::monomial(1, std::vector<unsigned>{2, 3, 5}[rng() % 3]);
    case 1: return chebyshev(std::vector<unsigned>{2, 3, 5}[rng() % 3]);
    default: return test_support::random_monic(rng, 4, 3, 2);
    }
  };
  for (int s = 0; s < 20; ++s) {
    const auto p = compose(random_linear(rng),
                           compose(random_factor(), compose(random_linear(rng), compose(random_factor(), random_linear(rng)))));
    round_trip(p, "composition " + std::to_string(s) + " of degree " + std::to_string(p.degree()));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst residual %.2e", worst);
  return t.verdict(buf);
}

Verdict criterion_11(Rng &rng)
{
  Tally t;
  std::size_t embedded = 0, rejected = 0, intransitive = 0;
  for (std::uint64_t p : {5u, 7u}) {
    for (int s = 0; s < 200; ++s) {
      std::vector<Permutation> gens;
      if (s % 2 == 0) {
        const auto sigma = test_support::random_permutation(rng, p);
        for (int i = 0; i < 2; ++i) {
          const auto f = test_support::affine(p, 1 + rng() % (p - 1), rng() % p);
          gens.push_back(compose(compose(sigma.inverse(), f), sigma));
        }
      } else {
        gens = {test_support::random_permutation(rng, p), test_support::random_permutation(rng, p)};
      }
      const auto g = generate_group(p, gens);
      // Transitive groups of prime degree are solvable iff their order divides p(p - 1).
      const bool solvable = g.transitive && (p * (p - 1)) % g.order == 0;
      const std::string name = "p=" + std::to_string(p) + " sample " + std::to_string(s);
      if (g.transitive)
        t.expect(is_solvable(g) == solvable, name + " solvability");
      try {
        const auto e = affine_embedding(g);
        t.expect(solvable && e.has_value() && test_support::is_affine_relabeling(g, *e), name + " embedding");
        ++embedded;
      } catch (const Error &e) {
        const auto expected = g.transitive ? ErrorKind::NotSolvable : ErrorKind::NotTransitive;
        t.expect(!solvable && e.kind() == expected, name + " rejected: " + e.what());
        (g.transitive ? rejected : intransitive) += 1;
      }
    }
  }
  return t.verdict(std::to_string(embedded) + " embedded, " + std::to_string(rejected) + " nonsolvable, " +
                   std::to_string(intransitive) + " intransitive");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Acceptance suite"};
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Base seed for the randomized criteria");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 means no runtime bound
    std::function<Verdict(Rng &)> run;
  };
  const std::vector<Criterion> criteria{
    {1, "classification tables", 5, [](Rng &) { return criterion_1(); }},
    {2, "six solutions of the orders equation", 1, [](Rng &) { return criterion_2(); }},
    {3, "exemplars", 30, [](Rng &) { return criterion_3(); }},
    {4, "Galois closure preserves the datum", 0, criterion_4},
    {5, "fibered-product criterion", 0, criterion_5},
    {6, "genus bounds", 0, criterion_6},
    {7, "cyclic unbranched extensions", 0, [](Rng &) { return criterion_7(); }},
    {8, "quartic solver", 10, criterion_8},
    {9, "Chebyshev inversion", 0, criterion_9},
    {10, "Ritt verdicts", 0, criterion_10},
    {11, "affine embeddings of prime degree", 0, criterion_11},
  };

  int failed = 0;
  double total = 0;
  for (const auto &c : criteria) {
    Rng rng(seed * 1000 + static_cast<std::uint64_t>(c.id));
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run(rng);
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      v.ok = false;
      v.detail += ", over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failed += !v.ok;
    std::printf("%s criterion %d: %s (%s) [%.2f s]\n", v.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                v.detail.c_str(), secs);
  }
  const bool in_budget = total < 180;
  std::printf("%s full suite: %d of %zu criteria failed [%.2f s, budget 180 s]\n",
              failed == 0 && in_budget ? "PASS" : "FAIL", failed, criteria.size(), total);
  return failed == 0 && in_budget ? 0 : 1;
}
