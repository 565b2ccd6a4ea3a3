// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "ramified/classify.hpp"
#include "ramified/exemplars.hpp"
#include "ramified/perm.hpp"
#include "ramified/radicals.hpp"

using namespace ramified;

namespace {

std::vector<Permutation> symmetric_generators(std::size_t n)
{
  std::vector<Point> cycle(n), swap(n);
  for (Point i = 0; i < n; ++i) {
    cycle[i] = static_cast<Point>((i + 1) % n);
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  return {Permutation(cycle), Permutation(swap)};
}

template <auto Closure>
void group_closure(benchmark::State &state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto gens = symmetric_generators(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(Closure(n, gens, 50000).order);
}

template <auto Enumerate>
void enumeration(benchmark::State &state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(Enumerate(1, static_cast<std::uint64_t>(state.range(0))).size());
}

template <auto Eval>
void multivalued(benchmark::State &state)
{
  const auto e = invert_chebyshev(static_cast<unsigned>(state.range(0)), RadicalExpr::variable());
  EvalOptions at;
  at.w = Complex(0.3, 0.1);
  at.collapse = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(Eval(e, at).values.size());
}

GroupTable closure_par(std::size_t n, std::span<const Permutation> g, std::size_t cap) { return generate_group(n, g, cap); }
GroupTable closure_ser(std::size_t n, std::span<const Permutation> g, std::size_t cap) { return generate_group_serial(n, g, cap); }

} // namespace

BENCHMARK(group_closure<closure_par>)->Name("generate_group")->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(group_closure<closure_ser>)->Name("generate_group_serial")->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(enumeration<enumerate_galois_data>)->Name("enumerate_galois_data")->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(enumeration<enumerate_galois_data_serial>)->Name("enumerate_galois_data_serial")->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(multivalued<eval_multi>)->Name("eval_multi")->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(multivalued<eval_multi_serial>)->Name("eval_multi_serial")->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
