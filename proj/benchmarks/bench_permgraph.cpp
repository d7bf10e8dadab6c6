#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "permgraph/boxcar.hpp"
#include "permgraph/enumeration.hpp"
#include "permgraph/forbidden_catalog.hpp"
#include "permgraph/graph_search.hpp"
#include "permgraph/permutation.hpp"
#include "permgraph/planarity.hpp"

using namespace permgraph;

namespace {

Permutation shuffled(int n, unsigned seed) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::mt19937 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

Graph relabelled(const Graph& g, unsigned seed) {
  return relabel(g, shuffled(g.order(), seed).values());
}

}  // namespace

static void BM_FindRealizer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = relabelled(graph_from_permutation(shuffled(n, 7)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_realizer(g, n));
}
BENCHMARK(BM_FindRealizer)->DenseRange(6, 12, 2);

static void BM_FindRealizerNegative(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(find_realizer(g));
}
BENCHMARK(BM_FindRealizerNegative);

static void BM_IsomorphismBoxcar(benchmark::State& state) {
  const BoxcarSequence seq(std::vector<int>(static_cast<std::size_t>(state.range(0)), 3));
  const Graph g = boxcar_graph(seq);
  const Graph h = relabelled(g, 5);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, h, g.order()));
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_IsomorphismBoxcar)->DenseRange(1, 9, 2);

static void BM_ClassifyCubic(benchmark::State& state) {
  const BoxcarSequence seq(std::vector<int>(static_cast<std::size_t>(state.range(0)), 2));
  const Graph g = relabelled(boxcar_graph(seq), 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_cubic(g));
}
BENCHMARK(BM_ClassifyCubic)->DenseRange(0, 8, 4);

static void BM_Planarity(benchmark::State& state) {
  const Graph g = boxcar_graph(BoxcarSequence(std::vector<int>(static_cast<std::size_t>(state.range(0)), 3)));
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
}
BENCHMARK(BM_Planarity)->DenseRange(0, 10, 5);

static void BM_CensusCubic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_cubic(n));
}
BENCHMARK(BM_CensusCubic)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_DeriveCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_forbidden_catalog(8));
}
BENCHMARK(BM_DeriveCatalog)->Unit(benchmark::kMillisecond);

static void BM_CountCubic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_cubic(n));
}
BENCHMARK(BM_CountCubic)->Arg(60)->Arg(1000);

static void BM_GenerateSequences(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_sequences(n));
}
BENCHMARK(BM_GenerateSequences)->Arg(40)->Arg(60);

BENCHMARK_MAIN();
