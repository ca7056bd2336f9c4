#include "earcolor/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "earcolor/error.hpp"

namespace earcolor {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
  }
}

}  // namespace

Digraph::Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n)), in_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) {
    check_vertex(n, a.tail);
    check_vertex(n, a.head);
    if (a.tail == a.head) throw InputError("loop at vertex " + std::to_string(a.tail));
    out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
    in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
  for (std::size_t v = 0; v < out_.size(); ++v) {
    const auto& list = out_[v];
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("parallel arc leaving vertex " + std::to_string(v));
    }
  }
  arc_count_ = arcs.size();
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (tail < 0 || tail >= n_) return false;
  const auto& list = out_[static_cast<std::size_t>(tail)];
  return std::binary_search(list.begin(), list.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_neighbors(u)) result.push_back({u, v});
  }
  return result;
}

UndirectedGraph::UndirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

UndirectedGraph::UndirectedGraph(int n, std::span<const Edge> edges) : UndirectedGraph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) throw InputError("self-edge at vertex " + std::to_string(e.u));
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge");
  }
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool UndirectedGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_) return false;
  const auto& list = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

VertexCycle VertexCycle::canonical(std::vector<Vertex> sequence) {
  if (!sequence.empty()) {
    auto smallest = std::min_element(sequence.begin(), sequence.end());
    std::rotate(sequence.begin(), smallest, sequence.end());
  }
  return VertexCycle{std::move(sequence)};
}

namespace {

bool all_distinct_in_range(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<char> seen(static_cast<std::size_t>(d.vertex_count()), 0);
  for (Vertex v : vertices) {
    if (v < 0 || v >= d.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

}  // namespace

bool is_path_in(const Digraph& d, std::span<const Vertex> vertices) {
  if (vertices.empty() || !all_distinct_in_range(d, vertices)) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!d.has_arc(vertices[i], vertices[i + 1])) return false;
  }
  return true;
}

bool is_cycle_in(const Digraph& d, std::span<const Vertex> vertices) {
  if (vertices.size() < 2 || !is_path_in(d, vertices)) return false;
  return d.has_arc(vertices.back(), vertices.front());
}

std::vector<std::vector<Vertex>> strong_components(const Digraph& d) {
  // Iterative Tarjan; components pop in reverse topological order.
  const int n = d.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::vector<std::vector<Vertex>> components;
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto vi = static_cast<std::size_t>(v);
      if (next == 0 && index[vi] == -1) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      auto succ = d.out_neighbors(v);
      if (next < succ.size()) {
        Vertex w = succ[next++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] == -1) {
          call.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      Vertex finished = v;
      call.pop_back();
      if (!call.empty()) {
        const auto pi = static_cast<std::size_t>(call.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  std::reverse(components.begin(), components.end());
  return components;
}

bool strongly_connected(const Digraph& d) {
  const int n = d.vertex_count();
  if (n <= 1) return true;
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> todo{0};
    seen[0] = 1;
    int count = 1;
    while (!todo.empty()) {
      Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : forward ? d.out_neighbors(v) : d.in_neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          todo.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

bool is_acyclic(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> indegree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) indegree[static_cast<std::size_t>(v)] = static_cast<int>(d.in_neighbors(v).size());
  std::queue<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop();
    ++removed;
    for (Vertex w : d.out_neighbors(v)) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  return removed == n;
}

std::optional<VertexCycle> find_cycle(const Digraph& d) {
  const int n = d.vertex_count();
  // 0 = unvisited, 1 = on DFS path, 2 = finished
  std::vector<char> state(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> path;
  std::vector<std::size_t> next;
  for (Vertex root = 0; root < n; ++root) {
    if (state[static_cast<std::size_t>(root)] != 0) continue;
    path.assign(1, root);
    next.assign(1, 0);
    state[static_cast<std::size_t>(root)] = 1;
    while (!path.empty()) {
      Vertex v = path.back();
      auto succ = d.out_neighbors(v);
      if (next.back() == succ.size()) {
        state[static_cast<std::size_t>(v)] = 2;
        path.pop_back();
        next.pop_back();
        continue;
      }
      Vertex w = succ[next.back()++];
      if (state[static_cast<std::size_t>(w)] == 1) {
        auto start = std::find(path.begin(), path.end(), w);
        return VertexCycle::canonical(std::vector<Vertex>(start, path.end()));
      }
      if (state[static_cast<std::size_t>(w)] == 0) {
        state[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        next.push_back(0);
      }
    }
  }
  return std::nullopt;
}

Digraph bidirect(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(g.vertex_count(), arcs);
}

UndirectedGraph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (const Arc& a : d.arcs()) {
    if (a.tail < a.head || !d.has_arc(a.head, a.tail)) {
      edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
  }
  return UndirectedGraph(d.vertex_count(), edges);
}

InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> subset) {
  InducedSubdigraph result;
  result.from_host.assign(static_cast<std::size_t>(d.vertex_count()), -1);
  result.to_host.assign(subset.begin(), subset.end());
  std::sort(result.to_host.begin(), result.to_host.end());
  for (std::size_t i = 0; i < result.to_host.size(); ++i) {
    Vertex v = result.to_host[i];
    check_vertex(d.vertex_count(), v);
    if (result.from_host[static_cast<std::size_t>(v)] != -1) {
      throw InputError("vertex " + std::to_string(v) + " repeated in subset");
    }
    result.from_host[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < result.to_host.size(); ++i) {
    for (Vertex w : d.out_neighbors(result.to_host[i])) {
      Vertex j = result.from_host[static_cast<std::size_t>(w)];
      if (j != -1) arcs.push_back({static_cast<Vertex>(i), j});
    }
  }
  result.graph = Digraph(static_cast<int>(result.to_host.size()), arcs);
  return result;
}

}  // namespace earcolor
