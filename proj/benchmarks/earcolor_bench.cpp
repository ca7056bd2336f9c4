#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "earcolor/acyclic_coloring.hpp"
#include "earcolor/clique_cycle.hpp"
#include "earcolor/cycles.hpp"
#include "earcolor/digraph.hpp"
#include "earcolor/proper_coloring.hpp"

namespace {

using earcolor::Arc;
using earcolor::Digraph;
using earcolor::Vertex;

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 with chords i -> i+step.
Digraph chorded_cycle(int n, int step) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back({i, (i + 1) % n});
    if (step > 1 && n > step) arcs.push_back({i, (i + step) % n});
  }
  return Digraph(n, arcs);
}

Digraph directed_cycle(int n) { return chorded_cycle(n, 1); }

Digraph bidirected_complete(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

Digraph random_tournament(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 2) arcs.push_back({u, v});
      else arcs.push_back({v, u});
    }
  return Digraph(n, arcs);
}

void BM_CycleEnumeration(benchmark::State& state) {
  const Digraph d = random_tournament(static_cast<int>(state.range(0)), 7);
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    earcolor::for_each_cycle(d, [&](std::span<const Vertex>) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
  state.counters["cycles"] = static_cast<double>(count);
}
BENCHMARK(BM_CycleEnumeration)->DenseRange(6, 10, 2);

void BM_ResidueCensus(benchmark::State& state) {
  const Digraph d = chorded_cycle(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(earcolor::residue_census(d, 4));
}
BENCHMARK(BM_ResidueCensus)->RangeMultiplier(2)->Range(8, 32);

void BM_ColorMod1Complete(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Digraph d = bidirected_complete(k);
  for (auto _ : state) benchmark::DoNotOptimize(earcolor::color_mod1(d, k));
}
BENCHMARK(BM_ColorMod1Complete)->DenseRange(3, 7, 2);

void BM_ColorMod1LongCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = directed_cycle(n);
  // A single n-cycle avoids residue 1 modulo n - 2 for n >= 5.
  for (auto _ : state) benchmark::DoNotOptimize(earcolor::color_mod1(d, n - 2));
}
BENCHMARK(BM_ColorMod1LongCycle)->RangeMultiplier(4)->Range(16, 256);

void BM_AcyclicColorTournament(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph d = random_tournament(n, 11);
  // A tournament on n vertices has no cycle longer than n, so residue n+1 mod n+2 is free.
  for (auto _ : state) benchmark::DoNotOptimize(earcolor::acyclic_color(d, n + 2, n + 1));
}
BENCHMARK(BM_AcyclicColorTournament)->DenseRange(5, 9, 2);

void BM_HamiltonianSemicomplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Digraph d = random_tournament(n, 3);
  for (std::uint64_t seed = 4; !earcolor::strongly_connected(d); ++seed) d = random_tournament(n, seed);
  for (auto _ : state) benchmark::DoNotOptimize(earcolor::hamiltonian_semicomplete(d));
}
BENCHMARK(BM_HamiltonianSemicomplete)->RangeMultiplier(2)->Range(8, 128);

void BM_CycleThroughClique(benchmark::State& state) {
  // A transitive tournament on U = {0..s-1} closed into a strong digraph by a long return path.
  const int s = static_cast<int>(state.range(0));
  const int n = 2 * s;
  std::vector<Arc> arcs;
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) arcs.push_back({u, v});
  arcs.push_back({s - 1, s});
  for (int v = s; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  arcs.push_back({n - 1, 0});
  const Digraph d(n, arcs);
  std::vector<Vertex> set(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) set[static_cast<std::size_t>(i)] = i;
  for (auto _ : state) benchmark::DoNotOptimize(earcolor::cycle_through_clique(d, set));
}
BENCHMARK(BM_CycleThroughClique)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
