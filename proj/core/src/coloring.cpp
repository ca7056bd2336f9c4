#include "earcolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace earcolor {

std::string to_string(ColoringKind kind) {
  return kind == ColoringKind::proper ? "proper" : "acyclic";
}

int Coloring::distinct_colors() const {
  return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

namespace {

bool arity_ok(int n, std::span<const int> colors, ColoringVerdict& verdict) {
  if (static_cast<int>(colors.size()) != n) {
    verdict.reason = "coloring has " + std::to_string(colors.size()) + " entries for " +
                     std::to_string(n) + " vertices";
    return false;
  }
  if (std::any_of(colors.begin(), colors.end(), [](int c) { return c < 0; })) {
    verdict.reason = "negative color";
    return false;
  }
  return true;
}

int count_colors(std::span<const int> colors) {
  return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

}  // namespace

ColoringVerdict verify_proper(const Digraph& d, std::span<const int> colors) {
  ColoringVerdict verdict;
  if (!arity_ok(d.vertex_count(), colors, verdict)) return verdict;
  verdict.colors_used = count_colors(colors);
  for (const Arc& a : d.arcs()) {
    if (colors[static_cast<std::size_t>(a.tail)] == colors[static_cast<std::size_t>(a.head)]) {
      verdict.monochromatic_arc = a;
      verdict.reason = "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") is monochromatic";
      return verdict;
    }
  }
  verdict.valid = true;
  return verdict;
}

ColoringVerdict verify_proper(const UndirectedGraph& g, std::span<const int> colors) {
  ColoringVerdict verdict;
  if (!arity_ok(g.vertex_count(), colors, verdict)) return verdict;
  verdict.colors_used = count_colors(colors);
  for (const Edge& e : g.edges()) {
    if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)]) {
      verdict.monochromatic_arc = Arc{e.u, e.v};
      verdict.reason = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} is monochromatic";
      return verdict;
    }
  }
  verdict.valid = true;
  return verdict;
}

ColoringVerdict verify_acyclic(const Digraph& d, std::span<const int> colors) {
  ColoringVerdict verdict;
  if (!arity_ok(d.vertex_count(), colors, verdict)) return verdict;
  verdict.colors_used = count_colors(colors);
  std::map<int, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < d.vertex_count(); ++v) classes[colors[static_cast<std::size_t>(v)]].push_back(v);
  for (const auto& [color, members] : classes) {
    auto sub = induced_subdigraph(d, members);
    if (auto cycle = find_cycle(sub.graph)) {
      std::vector<Vertex> host;
      for (Vertex v : cycle->vertices) host.push_back(sub.to_host[static_cast<std::size_t>(v)]);
      verdict.monochromatic_cycle = VertexCycle::canonical(std::move(host));
      verdict.reason = "color class " + std::to_string(color) + " contains a directed cycle";
      return verdict;
    }
  }
  verdict.valid = true;
  return verdict;
}

ColoringVerdict verify_coloring(const Digraph& d, Coloring& c) {
  ColoringVerdict verdict =
      c.kind == ColoringKind::proper ? verify_proper(d, c.colors) : verify_acyclic(d, c.colors);
  c.verified = verdict.valid;
  return verdict;
}

std::vector<int> compact_colors(std::span<const int> colors) {
  std::map<int, int> relabel;
  std::vector<int> result;
  result.reserve(colors.size());
  for (int c : colors) {
    auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
    result.push_back(it->second);
  }
  return result;
}

}  // namespace earcolor
