#include "earcolor/clique_cycle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "earcolor/error.hpp"

namespace earcolor {

namespace {

// Extends `cycle` by one or more uncovered vertices of a strong semicomplete h.
void grow(const Digraph& h, std::vector<Vertex>& cycle, std::vector<char>& on_cycle) {
  const int n = h.vertex_count();
  const auto m = cycle.size();
  std::vector<int> kind(static_cast<std::size_t>(n), 0);  // 1: dominated by cycle, 2: dominates cycle
  for (Vertex w = 0; w < n; ++w) {
    if (on_cycle[static_cast<std::size_t>(w)]) continue;
    bool from_cycle = false;
    bool to_cycle = false;
    for (Vertex c : cycle) {
      from_cycle = from_cycle || h.has_arc(c, w);
      to_cycle = to_cycle || h.has_arc(w, c);
    }
    if (from_cycle && to_cycle) {
      for (std::size_t i = 0; i < m; ++i) {
        if (h.has_arc(cycle[i], w) && h.has_arc(w, cycle[(i + 1) % m])) {
          cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), w);
          on_cycle[static_cast<std::size_t>(w)] = 1;
          return;
        }
      }
      throw DefectError("no insertion point for a vertex adjacent both ways to the cycle");
    }
    kind[static_cast<std::size_t>(w)] = from_cycle ? 1 : 2;
  }

  // Every uncovered vertex is one-sided: bridge from a dominated vertex to a
  // dominating one through uncovered vertices and splice after cycle[0].
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  std::queue<Vertex> todo;
  for (Vertex w = 0; w < n; ++w) {
    if (kind[static_cast<std::size_t>(w)] == 1) {
      parent[static_cast<std::size_t>(w)] = -1;
      todo.push(w);
    }
  }
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop();
    if (kind[static_cast<std::size_t>(v)] == 2) {
      std::vector<Vertex> bridge;
      for (Vertex x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) bridge.push_back(x);
      std::reverse(bridge.begin(), bridge.end());
      cycle.insert(cycle.begin() + 1, bridge.begin(), bridge.end());
      for (Vertex x : bridge) on_cycle[static_cast<std::size_t>(x)] = 1;
      return;
    }
    for (Vertex w : h.out_neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (on_cycle[wi] || parent[wi] != -2) continue;
      parent[wi] = v;
      todo.push(w);
    }
  }
  throw InputError("digraph is not strongly connected");
}

}  // namespace

VertexCycle hamiltonian_semicomplete(const Digraph& h) {
  const int n = h.vertex_count();
  if (n < 2) throw InputError("Hamiltonian cycle needs at least two vertices");
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!h.adjacent(a, b)) throw InputError("digraph is not semicomplete");
    }
  }
  if (!strongly_connected(h)) throw InputError("digraph is not strongly connected");
  const auto start = find_cycle(h);
  if (!start) throw DefectError("strong digraph without a cycle");
  std::vector<Vertex> cycle = start->vertices;
  std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
  for (Vertex v : cycle) on_cycle[static_cast<std::size_t>(v)] = 1;
  while (static_cast<int>(cycle.size()) < n) grow(h, cycle, on_cycle);
  if (!is_cycle_in(h, cycle)) throw DefectError("Hamiltonian construction left the digraph");
  return VertexCycle::canonical(std::move(cycle));
}

namespace {

// Shortest path from any source to any target; BFS over sorted adjacency
// from sorted sources, so the first discovery fixes each parent.
VertexPath shortest_path(const Digraph& d, std::span<const Vertex> sources, std::span<const Vertex> targets) {
  const int n = d.vertex_count();
  std::vector<char> is_target(static_cast<std::size_t>(n), 0);
  for (Vertex t : targets) is_target[static_cast<std::size_t>(t)] = 1;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  std::queue<Vertex> todo;
  for (Vertex s : sources) {
    parent[static_cast<std::size_t>(s)] = -1;
    todo.push(s);
  }
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop();
    if (is_target[static_cast<std::size_t>(v)]) {
      VertexPath path;
      for (Vertex x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.vertices.push_back(x);
      std::reverse(path.vertices.begin(), path.vertices.end());
      return path;
    }
    for (Vertex w : d.out_neighbors(v)) {
      if (parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = v;
      todo.push(w);
    }
  }
  throw InputError("digraph is not strongly connected");
}

}  // namespace

CliqueCycleCertificate cycle_through_clique(const Digraph& d, std::span<const Vertex> u_set) {
  CliqueCycleCertificate cert;
  cert.covered.assign(u_set.begin(), u_set.end());
  std::sort(cert.covered.begin(), cert.covered.end());
  const auto& u = cert.covered;
  if (u.size() < 2) throw InputError("vertex set needs at least two vertices");
  if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw InputError("vertex set has repeated vertices");
  for (Vertex v : u) {
    if (v < 0 || v >= d.vertex_count()) throw InputError("vertex out of range");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (!d.adjacent(u[i], u[j])) throw InputError("vertex set is not pairwise adjacent");
    }
  }
  if (!strongly_connected(d)) throw InputError("digraph is not strongly connected");

  const InducedSubdigraph sub = induced_subdigraph(d, u);
  for (const auto& part : strong_components(sub.graph)) {
    std::vector<Vertex> host;
    for (Vertex v : part) host.push_back(sub.to_host[static_cast<std::size_t>(v)]);
    cert.components.push_back(std::move(host));
  }

  std::vector<Arc> h_arcs = sub.graph.arcs();
  std::map<std::pair<Vertex, Vertex>, std::size_t> detour_of;  // (x, y) in host ids
  if (cert.components.size() > 1) {
    cert.connector = shortest_path(d, cert.components.back(), cert.components.front());
    const auto& p = cert.connector.vertices;
    std::size_t last = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (sub.from_host[static_cast<std::size_t>(p[i])] == -1) continue;
      if (i - last >= 2) {
        const Vertex x = p[last];
        const Vertex y = p[i];
        if (!d.has_arc(y, x) || d.has_arc(x, y)) throw DefectError("detour endpoints are not joined by the arc (y, x)");
        detour_of[{x, y}] = cert.detours.size();
        cert.detours.push_back(VertexPath{{p.begin() + static_cast<std::ptrdiff_t>(last),
                                           p.begin() + static_cast<std::ptrdiff_t>(i) + 1}});
        h_arcs.push_back({sub.from_host[static_cast<std::size_t>(x)], sub.from_host[static_cast<std::size_t>(y)]});
      }
      last = i;
    }
  }
  const Digraph h(static_cast<int>(u.size()), h_arcs);
  if (!strongly_connected(h)) throw DefectError("shortcut digraph on the vertex set is not strong");

  const VertexCycle core = hamiltonian_semicomplete(h);
  std::vector<Vertex> core_host;
  for (Vertex v : core.vertices) core_host.push_back(sub.to_host[static_cast<std::size_t>(v)]);
  cert.hamiltonian_core = VertexCycle::canonical(core_host);

  std::vector<Vertex> cycle;
  for (std::size_t i = 0; i < core_host.size(); ++i) {
    const Vertex a = core_host[i];
    const Vertex b = core_host[(i + 1) % core_host.size()];
    cycle.push_back(a);
    if (d.has_arc(a, b)) continue;
    const auto found = detour_of.find({a, b});
    if (found == detour_of.end()) throw DefectError("core arc is neither an arc of the digraph nor a detour");
    const auto& interior = cert.detours[found->second].vertices;
    cycle.insert(cycle.end(), interior.begin() + 1, interior.end() - 1);
  }
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || !is_cycle_in(d, cycle)) {
    throw DefectError("spliced cycle is not a simple cycle of the digraph");
  }
  cert.cycle = VertexCycle::canonical(std::move(cycle));
  return cert;
}

}  // namespace earcolor
