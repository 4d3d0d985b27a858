#include "coxy/oracle.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace coxy;

namespace {

// A cycle of length n plus chords from vertex 1 to every other odd vertex.
Graph fan_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    edges.push_back({"p" + std::to_string(v), v, v + 1});
  for (Vertex v = 3; v <= n; v += 2)
    edges.push_back({"x" + std::to_string(v), 1, v});
  return Graph(n, edges);
}

std::vector<std::string> labels_of(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges())
    out.push_back(e.label);
  return out;
}

void BM_Phi(benchmark::State& state) {
  Context ctx(fan_graph(static_cast<int>(state.range(0))));
  auto labels = labels_of(ctx.graph());
  Rng rng(1);
  auto w = random_word(labels, rng, 200);
  for (auto _ : state)
    benchmark::DoNotOptimize(phi(ctx, w));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(w.size()));
}
BENCHMARK(BM_Phi)->Arg(6)->Arg(12)->Arg(24);

void BM_IsTrivial(benchmark::State& state) {
  Context ctx(fan_graph(static_cast<int>(state.range(0))));
  auto labels = labels_of(ctx.graph());
  Rng rng(2);
  auto w = random_word(labels, rng, 100);
  auto trivial = w + w.inverse();
  for (auto _ : state)
    benchmark::DoNotOptimize(is_trivial(ctx, trivial));
}
BENCHMARK(BM_IsTrivial)->Arg(6)->Arg(12)->Arg(24);

void BM_PsiRoundTrip(benchmark::State& state) {
  Context ctx(fan_graph(static_cast<int>(state.range(0))));
  auto labels = labels_of(ctx.graph());
  Rng rng(3);
  auto image = phi(ctx, random_word(labels, rng, 40));
  for (auto _ : state)
    benchmark::DoNotOptimize(phi(ctx, psi(ctx, image)));
}
BENCHMARK(BM_PsiRoundTrip)->Arg(6)->Arg(12);

void BM_IdentitySuite(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(identity_suite(5, 6, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IdentitySuite)->Arg(100);

void BM_GroupOrder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Permutation> gens;
  for (Vertex v = 1; v < n; ++v)
    gens.push_back(Permutation::transposition(n, v, v + 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(bfs_group_order(gens));
}
BENCHMARK(BM_GroupOrder)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
