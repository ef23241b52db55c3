#include <benchmark/benchmark.h>

#include <random>

#include "mf/canonical.hpp"
#include "mf/coloring.hpp"
#include "mf/connectivity.hpp"
#include "mf/disjoint_paths.hpp"
#include "mf/generate.hpp"
#include "mf/minor.hpp"
#include "mf/patterns.hpp"
#include "mf/verify.hpp"

namespace {

mf::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<mf::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return mf::Graph::from_edges(n, edges);
}

std::vector<mf::Graph> sample(int n, double p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<mf::Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(rng, n, p));
  return out;
}

void BM_GenerateAll(benchmark::State& state) {
  mf::GraphFilter f;
  f.n = int(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) count = mf::generate_graph_list(f).size();
  state.counters["graphs"] = double(count);
}
BENCHMARK(BM_GenerateAll)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_GenerateExtremal(benchmark::State& state) {
  const int n = int(state.range(0));
  mf::GraphFilter f;
  f.n = n;
  f.min_edges = 4 * n - 8;
  f.min_connectivity = 4;
  std::size_t count = 0;
  for (auto _ : state) count = mf::generate_graph_list(f).size();
  state.counters["graphs"] = double(count);
}
BENCHMARK(BM_GenerateExtremal)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto gs = sample(int(state.range(0)), 0.5, 64, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mf::canonical_form(gs[i++ % gs.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_FindModelK7v(benchmark::State& state) {
  const auto gs = sample(int(state.range(0)), 0.75, 32, 2);
  const mf::Pattern p = mf::parse_pattern("k7v");
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mf::find_model(gs[i++ % gs.size()], p));
}
BENCHMARK(BM_FindModelK7v)->DenseRange(8, 10)->Unit(benchmark::kMicrosecond);

void BM_NoK7vInK2222(benchmark::State& state) {
  const mf::Graph g = mf::parse_pattern("k2222").graph;
  const mf::Pattern p = mf::parse_pattern("k7v");
  for (auto _ : state) benchmark::DoNotOptimize(mf::find_model(g, p));
}
BENCHMARK(BM_NoK7vInK2222)->Unit(benchmark::kMicrosecond);

void BM_RootedK4(benchmark::State& state) {
  const auto gs = sample(8, 0.6, 32, 3);
  const mf::Pattern p = mf::parse_pattern("k4");
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mf::find_rooted_model(gs[i++ % gs.size()], p, {0, 1, 2, 3}));
}
BENCHMARK(BM_RootedK4)->Unit(benchmark::kMicrosecond);

void BM_ChromaticNumber(benchmark::State& state) {
  const auto gs = sample(int(state.range(0)), 0.5, 32, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mf::chromatic_number(gs[i++ % gs.size()]));
}
BENCHMARK(BM_ChromaticNumber)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_VertexConnectivity(benchmark::State& state) {
  const auto gs = sample(int(state.range(0)), 0.5, 32, 5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mf::vertex_connectivity(gs[i++ % gs.size()]));
}
BENCHMARK(BM_VertexConnectivity)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_TwoDisjointPaths(benchmark::State& state) {
  const auto gs = sample(int(state.range(0)), 0.3, 32, 6);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mf::two_disjoint_paths(gs[i++ % gs.size()], 0, 1, 2, 3));
}
BENCHMARK(BM_TwoDisjointPaths)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_VerifyExtremal(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mf::verify_extremal(n).violations.size());
}
BENCHMARK(BM_VerifyExtremal)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
