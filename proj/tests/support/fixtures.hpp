#pragma once

#include <vector>

#include "earcolor/digraph.hpp"

namespace earcolor::testing {

inline Digraph digraph(int n, std::vector<Arc> arcs) { return Digraph(n, arcs); }
inline UndirectedGraph graph(int n, std::vector<Edge> edges) { return UndirectedGraph(n, edges); }

inline Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, arcs);
}

inline Digraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Digraph(n, arcs);
}

inline UndirectedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return UndirectedGraph(n, edges);
}

inline UndirectedGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, edges);
}

inline UndirectedGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return UndirectedGraph(n, edges);
}

inline Digraph bidirected_complete(int n) { return bidirect(complete_graph(n)); }

inline UndirectedGraph petersen() {
  return UndirectedGraph(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

// Alternating orientation of the (2m+1)-cycle plus a vertex joined to every
// cycle vertex by opposite arcs. m = 2 gives the 6-vertex instance.
inline Digraph alternating_wheel(int m) {
  const int c = 2 * m + 1;
  std::vector<Arc> arcs;
  // v_1 -> v_2 <- v_3 -> ... <- v_{2m+1} -> v_1, 0-based.
  for (int i = 0; i < c - 1; ++i) {
    if (i % 2 == 0) arcs.push_back({i, i + 1});
    else arcs.push_back({i + 1, i});
  }
  arcs.push_back({c - 1, 0});
  for (int i = 0; i < c; ++i) {
    arcs.push_back({c, i});
    arcs.push_back({i, c});
  }
  return Digraph(c + 1, arcs);
}

inline Digraph transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
  return Digraph(n, arcs);
}

}  // namespace earcolor::testing
