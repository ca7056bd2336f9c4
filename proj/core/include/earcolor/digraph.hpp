#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace earcolor {

using Vertex = int;

struct Arc {
  Vertex tail;
  Vertex head;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Edge {
  Vertex u;  // u < v after normalization
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Loop-free digraph without parallel arcs on vertices 0..n-1. Opposite arcs
// (u,v) and (v,u) may both be present. Immutable once constructed; adjacency
// is kept sorted in both directions.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  // Throws InputError on out-of-range endpoints, loops or duplicate arcs.
  Digraph(int n, std::span<const Arc> arcs);

  int vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_arc(Vertex tail, Vertex head) const;
  bool adjacent(Vertex a, Vertex b) const { return has_arc(a, b) || has_arc(b, a); }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }

  // All arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);
  // Edges are unordered; {u,v} and {v,u} count as duplicates.
  UndirectedGraph(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  // Normalized (u < v), sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Simple directed path; consecutive entries are arcs of the host.
struct VertexPath {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

// Simple directed cycle, closing arc from back() to front() implied.
// Stored in canonical rotation: minimum vertex first, direction preserved.
struct VertexCycle {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }

  static VertexCycle canonical(std::vector<Vertex> sequence);

  friend auto operator<=>(const VertexCycle&, const VertexCycle&) = default;
};

bool is_path_in(const Digraph& d, std::span<const Vertex> vertices);
bool is_cycle_in(const Digraph& d, std::span<const Vertex> vertices);

bool strongly_connected(const Digraph& d);

// Strong components in a topological order of the condensation: every arc
// between distinct components goes from an earlier to a later one. Vertices
// inside each component are sorted.
std::vector<std::vector<Vertex>> strong_components(const Digraph& d);

bool is_acyclic(const Digraph& d);

// Some directed cycle of d, canonical rotation, or nullopt when acyclic.
std::optional<VertexCycle> find_cycle(const Digraph& d);

Digraph bidirect(const UndirectedGraph& g);
UndirectedGraph underlying_graph(const Digraph& d);

struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> to_host;    // new index -> host vertex
  std::vector<Vertex> from_host;  // host vertex -> new index, or -1
};

// Vertices of `subset` are re-indexed in ascending host order. Throws
// InputError for out-of-range or repeated vertices.
InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> subset);

}  // namespace earcolor
