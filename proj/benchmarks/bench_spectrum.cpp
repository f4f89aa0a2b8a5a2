#include <benchmark/benchmark.h>

#include "qsrg/cayley.hpp"
#include "qsrg/exact_rank.hpp"
#include "qsrg/group_spec.hpp"
#include "qsrg/spectrum.hpp"

using namespace qsrg;

namespace {

IntMatrix gamma_adjacency(const std::string& spec, int generator) {
  const FiniteGroup g = build_family(parse_group_spec(spec));
  const SubgroupData h = subgroup_generated(g, {generator});
  return gamma_H(direct_square(g), g, h).graph.adjacency_matrix();
}

void BM_exact_rank(benchmark::State& state) {
  IntMatrix a = gamma_adjacency("Z12", 4);
  for (int i = 0; i < static_cast<int>(a.size()); ++i) a[i][i] -= 9;  // an eigenvalue shift
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(a));
}
BENCHMARK(BM_exact_rank)->Unit(benchmark::kMillisecond);

void BM_modular_rank(benchmark::State& state) {
  IntMatrix a = gamma_adjacency("Z12", 4);
  for (int i = 0; i < static_cast<int>(a.size()); ++i) a[i][i] -= 5;  // not an eigenvalue
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(a, 2147483647));
}
BENCHMARK(BM_modular_rank)->Unit(benchmark::kMillisecond);

void BM_full_spectrum(benchmark::State& state) {
  const IntMatrix a = gamma_adjacency("Z12", 4);
  for (auto _ : state) benchmark::DoNotOptimize(full_spectrum(a));
}
BENCHMARK(BM_full_spectrum)->Unit(benchmark::kMillisecond);

void BM_gamma_construction(benchmark::State& state) {
  const FiniteGroup g = build_family(parse_group_spec("Z12"));
  const SubgroupData h = subgroup_generated(g, {4});
  const FiniteGroup gsq = direct_square(g);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_H(gsq, g, h));
}
BENCHMARK(BM_gamma_construction)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
