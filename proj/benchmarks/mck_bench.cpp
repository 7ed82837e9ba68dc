#include <benchmark/benchmark.h>

#include "mck/coloring.hpp"
#include "mck/generators.hpp"
#include "mck/kecss.hpp"
#include "mck/search.hpp"
#include "mck/tree_packing.hpp"

using namespace mck;

namespace {

void BM_VerifyPackingColoring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = gen::complete(n);
  const EdgeColoring c = packing_coloring(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_mc_k(g, c, 2).pass);
}
BENCHMARK(BM_VerifyPackingColoring)->DenseRange(6, 12, 2);

void BM_VerifyRandomKec(benchmark::State& state) {
  const Graph g = gen::random_kec(static_cast<int>(state.range(0)), 3, 99);
  const EdgeColoring mono = EdgeColoring::monochromatic(g.size());
  for (auto _ : state) benchmark::DoNotOptimize(is_umc_k(g, mono, 3).pass);
}
BENCHMARK(BM_VerifyRandomKec)->Arg(10)->Arg(20)->Arg(40);

void BM_MinimumKecssPetersen(benchmark::State& state) {
  const Graph g = gen::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(minimum_kecss(g, 2).size);
}
BENCHMARK(BM_MinimumKecssPetersen)->Unit(benchmark::kMillisecond);

void BM_MinimumKecssComplete(benchmark::State& state) {
  const Graph g = gen::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimum_kecss(g, 3).size);
}
BENCHMARK(BM_MinimumKecssComplete)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_ExactMcK5(benchmark::State& state) {
  const Graph g = gen::complete(5);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_mc_k(g, k).value);
}
BENCHMARK(BM_ExactMcK5)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ExactUmcPetersen(benchmark::State& state) {
  const Graph g = gen::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(exact_umc_k(g, 2, {.max_edges = 15}).value);
}
BENCHMARK(BM_ExactUmcPetersen)->Unit(benchmark::kMillisecond);

void BM_TreePacking(benchmark::State& state) {
  const Graph g = gen::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_packing_number(g).k());
}
BENCHMARK(BM_TreePacking)->DenseRange(6, 14, 4);

void BM_PsiOracle(benchmark::State& state) {
  const Graph g = gen::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi_oracle(g).Psi);
}
BENCHMARK(BM_PsiOracle)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
