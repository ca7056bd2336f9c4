#include "generators.hpp"

#include <algorithm>

#include "earcolor/cycles.hpp"

namespace earcolor::testing {

namespace {

bool coin(double p, Rng& rng) { return std::bernoulli_distribution(p)(rng); }

Vertex pick(std::span<const Vertex> from, Rng& rng) {
  return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
}

std::vector<Arc> without(const std::vector<Arc>& arcs, Arc removed) {
  std::vector<Arc> out;
  for (const Arc& a : arcs)
    if (a != removed) out.push_back(a);
  return out;
}

}  // namespace

Digraph random_digraph(int n, double p, Rng& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(p, rng)) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

UndirectedGraph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(p, rng)) edges.push_back({u, v});
  return UndirectedGraph(n, edges);
}

Digraph random_tournament(int n, Rng& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) arcs.push_back(coin(0.5, rng) ? Arc{u, v} : Arc{v, u});
  return Digraph(n, arcs);
}

Digraph make_strong(const Digraph& d, Rng& rng) {
  Digraph current = d;
  while (true) {
    const auto components = strong_components(current);
    if (components.size() <= 1) return current;
    std::vector<Arc> arcs = current.arcs();
    arcs.push_back({pick(components.back(), rng), pick(components.front(), rng)});
    current = Digraph(d.vertex_count(), arcs);
  }
}

Digraph random_strong_digraph(int n, double p, Rng& rng) { return make_strong(random_digraph(n, p, rng), rng); }

Digraph random_strong_tournament(int n, Rng& rng) {
  while (true) {
    Digraph t = random_tournament(n, rng);
    if (strongly_connected(t)) return t;
  }
}

std::optional<Digraph> prune_to_hypothesis(const Digraph& d, int k, int r, bool keep_strong, Rng& rng) {
  Digraph current = d;
  while (true) {
    const HypothesisVerdict verdict = hypothesis_holds(current, k, r);
    if (verdict.holds) return current;
    const auto& cyc = verdict.witness->vertices;
    std::vector<Arc> candidates;
    for (std::size_t i = 0; i < cyc.size(); ++i) candidates.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    bool removed = false;
    for (const Arc& a : candidates) {
      Digraph next(current.vertex_count(), without(current.arcs(), a));
      if (keep_strong && !strongly_connected(next)) continue;
      current = std::move(next);
      removed = true;
      break;
    }
    if (!removed) return std::nullopt;
  }
}

std::optional<UndirectedGraph> prune_graph_to_hypothesis(const UndirectedGraph& g, int k, int r, Rng& rng) {
  UndirectedGraph current = g;
  CensusOptions options;
  options.min_length = 3;
  while (true) {
    const HypothesisVerdict verdict = hypothesis_holds(bidirect(current), k, r, options);
    if (verdict.holds) return current;
    const auto& cyc = verdict.witness->vertices;
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, cyc.size() - 1)(rng);
    const Vertex a = cyc[i];
    const Vertex b = cyc[(i + 1) % cyc.size()];
    std::vector<Edge> edges;
    for (const Edge& e : current.edges())
      if (!(e.u == std::min(a, b) && e.v == std::max(a, b))) edges.push_back(e);
    current = UndirectedGraph(current.vertex_count(), edges);
  }
}

PlantedClique random_planted_clique(int n, int size, double p, Rng& rng) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Vertex> set(all.begin(), all.begin() + size);
  std::sort(set.begin(), set.end());

  std::vector<Arc> arcs = random_digraph(n, p, rng).arcs();
  // Mostly transitive orientations so that D[U] is often not strong.
  std::vector<Vertex> rank = set;
  std::shuffle(rank.begin(), rank.end(), rng);
  const bool transitive = coin(0.7, rng);
  auto has = [&](Vertex a, Vertex b) { return std::find(arcs.begin(), arcs.end(), Arc{a, b}) != arcs.end(); };
  for (std::size_t i = 0; i < rank.size(); ++i) {
    for (std::size_t j = i + 1; j < rank.size(); ++j) {
      const Vertex a = rank[i];
      const Vertex b = rank[j];
      if (transitive) {
        // Replace whatever is there by a single forward arc.
        arcs.erase(std::remove(arcs.begin(), arcs.end(), Arc{b, a}), arcs.end());
        if (!has(a, b)) arcs.push_back({a, b});
      } else if (!has(a, b) && !has(b, a)) {
        arcs.push_back(coin(0.5, rng) ? Arc{a, b} : Arc{b, a});
      }
    }
  }
  Digraph d(n, arcs);
  // Strengthen without touching arcs inside the set.
  while (!strongly_connected(d)) {
    const auto components = strong_components(d);
    std::vector<Arc> more = d.arcs();
    bool added = false;
    for (int attempt = 0; attempt < 64 && !added; ++attempt) {
      const Vertex a = pick(components.back(), rng);
      const Vertex b = pick(components.front(), rng);
      const bool inside = std::binary_search(set.begin(), set.end(), a) && std::binary_search(set.begin(), set.end(), b);
      if (inside) continue;
      more.push_back({a, b});
      added = true;
    }
    if (!added) {
      // Route through a vertex outside the set, or give up on this sample.
      std::vector<Vertex> outside;
      for (int v = 0; v < n; ++v)
        if (!std::binary_search(set.begin(), set.end(), v)) outside.push_back(v);
      if (outside.empty()) return random_planted_clique(n, size, p, rng);
      const Vertex w = pick(outside, rng);
      const Vertex a = pick(components.back(), rng);
      const Vertex b = pick(components.front(), rng);
      if (a != w && !d.has_arc(a, w)) more.push_back({a, w});
      if (b != w && !d.has_arc(w, b)) more.push_back({w, b});
    }
    d = Digraph(n, more);
  }
  return {d, set};
}

}  // namespace earcolor::testing
