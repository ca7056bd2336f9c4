#include "earcolor/corollaries.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "earcolor/error.hpp"
#include "earcolor/proper_coloring.hpp"

namespace earcolor {

const char* to_string(UndirectedMethod method) {
  switch (method) {
    case UndirectedMethod::bipartite: return "bipartite";
    case UndirectedMethod::odd_blocks: return "odd-blocks";
    case UndirectedMethod::acyclic_bidirection: return "acyclic-bidirection";
    case UndirectedMethod::exact_fallback: return "exact-fallback";
  }
  return "?";
}

std::optional<std::vector<int>> two_color(const UndirectedGraph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (colors[static_cast<std::size_t>(root)] != -1) continue;
    colors[static_cast<std::size_t>(root)] = 0;
    std::queue<Vertex> todo;
    todo.push(root);
    while (!todo.empty()) {
      Vertex v = todo.front();
      todo.pop();
      for (Vertex w : g.neighbors(v)) {
        int& cw = colors[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colors[static_cast<std::size_t>(v)];
          todo.push(w);
        } else if (cw == colors[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colors;
}

namespace {

// Blocks (biconnected components) as edge lists, Hopcroft-Tarjan.
class BlockFinder {
 public:
  explicit BlockFinder(const UndirectedGraph& g)
      : g_(g), depth_(static_cast<std::size_t>(g.vertex_count()), -1), low_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  std::vector<std::vector<Edge>> run() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (depth_[static_cast<std::size_t>(v)] == -1) visit(v, -1, 0);
    }
    return std::move(blocks_);
  }

 private:
  void visit(Vertex v, Vertex parent, int depth) {
    depth_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = depth;
    for (Vertex w : g_.neighbors(v)) {
      if (w == parent) continue;
      const auto wi = static_cast<std::size_t>(w);
      if (depth_[wi] == -1) {
        edges_.push_back({v, w});
        visit(w, v, depth + 1);
        low_[static_cast<std::size_t>(v)] = std::min(low_[static_cast<std::size_t>(v)], low_[wi]);
        if (low_[wi] >= depth) {
          std::vector<Edge> block;
          Edge e;
          do {
            e = edges_.back();
            edges_.pop_back();
            block.push_back(e);
          } while (!(e.u == v && e.v == w));
          blocks_.push_back(std::move(block));
        }
      } else if (depth_[wi] < depth) {
        edges_.push_back({v, w});
        low_[static_cast<std::size_t>(v)] = std::min(low_[static_cast<std::size_t>(v)], depth_[wi]);
      }
    }
  }

  const UndirectedGraph& g_;
  std::vector<int> depth_;
  std::vector<int> low_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Edge>> blocks_;
};

}  // namespace

std::vector<int> color_odd_blocks(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  const auto blocks = BlockFinder(g).run();
  // Per block: its vertices and, for cycles, the adjacency inside the block.
  std::vector<std::vector<Vertex>> block_vertices(blocks.size());
  std::vector<std::vector<std::size_t>> blocks_of(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto& vs = block_vertices[b];
    for (const Edge& e : blocks[b]) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const bool edge = blocks[b].size() == 1;
    const bool odd_cycle = blocks[b].size() == vs.size() && vs.size() % 2 == 1;
    if (!edge && !odd_cycle) throw InputError("graph has a block that is neither an edge nor an odd cycle");
    for (Vertex v : vs) blocks_of[static_cast<std::size_t>(v)].push_back(b);
  }

  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  std::vector<char> done(blocks.size(), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (colors[static_cast<std::size_t>(root)] != -1) continue;
    colors[static_cast<std::size_t>(root)] = 0;
    std::queue<Vertex> todo;
    todo.push(root);
    while (!todo.empty()) {
      const Vertex v = todo.front();
      todo.pop();
      const int a = colors[static_cast<std::size_t>(v)];
      const int b = a == 0 ? 1 : 0;
      const int third = 3 - a - b;
      for (std::size_t block : blocks_of[static_cast<std::size_t>(v)]) {
        if (done[block]) continue;
        done[block] = 1;
        std::vector<Vertex> walk{v};
        if (blocks[block].size() > 1) {
          // Walk the cycle starting at v.
          Vertex prev = -1;
          Vertex cur = v;
          for (std::size_t step = 1; step < block_vertices[block].size(); ++step) {
            for (const Edge& e : blocks[block]) {
              Vertex other = e.u == cur ? e.v : (e.v == cur ? e.u : -1);
              if (other != -1 && other != prev && other != v) {
                prev = cur;
                cur = other;
                break;
              }
            }
            walk.push_back(cur);
          }
        } else {
          const Edge& e = blocks[block].front();
          walk.push_back(e.u == v ? e.v : e.u);
        }
        const std::size_t m = walk.size();
        for (std::size_t i = 1; i < m; ++i) {
          int& c = colors[static_cast<std::size_t>(walk[i])];
          if (c != -1) throw DefectError("block vertex colored twice");
          if (m == 2) c = b;
          else c = i + 1 == m ? third : (i % 2 == 1 ? b : a);
          todo.push(walk[i]);
        }
      }
    }
  }
  return colors;
}

namespace {

void check_proper_or_throw(const UndirectedGraph& g, std::span<const int> colors, const char* what) {
  ColoringVerdict verdict = verify_proper(g, colors);
  if (!verdict.valid) throw DefectError(std::string(what) + ": " + verdict.reason);
}

CensusOptions undirected_census(const CorollaryOptions& options) {
  CensusOptions census = options.census;
  census.min_length = 3;
  return census;
}

}  // namespace

UndirectedColoring color_undirected(const UndirectedGraph& g, int k, int r, const CorollaryOptions& options) {
  UndirectedColoring out;
  out.modulus = k;
  out.residue = normalize_residue(r, k);
  const Digraph d = bidirect(g);
  HypothesisVerdict verdict = hypothesis_holds(d, k, out.residue, undirected_census(options));
  if (!verdict.holds) {
    throw HypothesisViolated("graph has a cycle of length " + std::to_string(out.residue) + " mod " + std::to_string(k),
                             verdict.witness->vertices);
  }

  std::vector<int> colors;
  if (k == 2 && out.residue == 1) {
    auto two = two_color(g);
    if (!two) throw DefectError("graph without odd cycles is not bipartite");
    colors = std::move(*two);
    out.bound = 2;
    out.method = UndirectedMethod::bipartite;
  } else if (k == 2) {
    colors = color_odd_blocks(g);
    out.bound = 3;
    out.method = UndirectedMethod::odd_blocks;
  } else if (out.residue == 2) {
    auto found = find_coloring(g, k + 1, options.oracle_vertices);
    if (!found) throw DefectError("no (k+1)-coloring of a graph without cycles of length 2 mod k");
    colors = std::move(*found);
    out.bound = k + 1;
    out.method = UndirectedMethod::exact_fallback;
  } else {
    AcyclicColoringOptions acyclic;
    acyclic.check_hypothesis = false;  // equivalent to the check above since r != 2
    acyclic.census = options.census;
    acyclic.ear_limits = options.ear_limits;
    colors = acyclic_color(d, k, out.residue, acyclic).result.colors;
    out.bound = k;
    out.method = UndirectedMethod::acyclic_bidirection;
  }
  check_proper_or_throw(g, colors, "undirected construction produced an improper coloring");
  out.coloring.colors = std::move(colors);
  out.coloring.kind = ColoringKind::proper;
  out.coloring.verified = true;
  if (out.coloring.distinct_colors() > out.bound) throw DefectError("undirected coloring exceeds its bound");
  return out;
}

namespace {

constexpr std::array<std::pair<BoundTheorem, const char*>, 7> kTheoremNames{{
    {BoundTheorem::odd_circumference, "odd-circ"},
    {BoundTheorem::circumference, "circ"},
    {BoundTheorem::longest_path, "longest-path"},
    {BoundTheorem::erdos_hajnal, "erdos-hajnal"},
    {BoundTheorem::tuza, "tuza"},
    {BoundTheorem::gyarfas, "gyarfas"},
    {BoundTheorem::mihok_schiermeyer, "mihok-schiermeyer"},
}};

void require_strong_nontrivial(const Digraph& d) {
  if (d.vertex_count() < 2) throw InputError("digraph must have at least two vertices");
  if (!strongly_connected(d)) throw InputError("digraph must be strongly connected");
}

// A failure here means the bound parameter was computed wrongly.
Coloring guaranteed_mod1(const Digraph& d, int k, const CorollaryOptions& options) {
  ProperColoringOptions proper;
  proper.census = options.census;
  proper.ear_limits = options.ear_limits;
  try {
    return color_mod1(d, k, proper).result;
  } catch (const HypothesisViolated& e) {
    throw DefectError(std::string("derived hypothesis failed: ") + e.what());
  }
}

BoundReport from_undirected(BoundTheorem theorem, std::string name, int parameter, int bound,
                            const UndirectedColoring& colored) {
  BoundReport report;
  report.theorem = theorem;
  report.parameter_name = std::move(name);
  report.parameter = parameter;
  report.bound = bound;
  report.modulus = colored.modulus;
  report.residue = colored.residue;
  report.witness = colored.coloring;
  report.method = to_string(colored.method);
  return report;
}

}  // namespace

const char* to_string(BoundTheorem theorem) {
  for (const auto& [t, name] : kTheoremNames) {
    if (t == theorem) return name;
  }
  return "?";
}

std::optional<BoundTheorem> parse_bound_theorem(std::string_view name) {
  for (const auto& [t, n] : kTheoremNames) {
    if (name == n) return t;
  }
  return std::nullopt;
}

bool takes_undirected_input(BoundTheorem theorem) {
  return theorem != BoundTheorem::odd_circumference && theorem != BoundTheorem::circumference &&
         theorem != BoundTheorem::longest_path;
}

BoundReport color_by_odd_circumference(const Digraph& d, const CorollaryOptions& options) {
  require_strong_nontrivial(d);
  BoundReport report;
  report.theorem = BoundTheorem::odd_circumference;
  report.parameter_name = "odd_circumference";
  report.parameter = cycle_stats(d).odd_circumference;
  report.bound = report.parameter + 1;
  report.modulus = report.bound;
  report.residue = 1;
  report.witness = guaranteed_mod1(d, report.bound, options);
  report.method = "ear-decomposition mod 1";
  return report;
}

BoundReport color_by_circumference(const Digraph& d, const CorollaryOptions& options) {
  require_strong_nontrivial(d);
  BoundReport report;
  report.theorem = BoundTheorem::circumference;
  report.parameter_name = "circumference";
  report.parameter = cycle_stats(d).circumference;
  report.bound = report.parameter;
  report.modulus = report.bound;
  report.residue = 1;
  report.witness = guaranteed_mod1(d, report.bound, options);
  report.method = "ear-decomposition mod 1";
  return report;
}

BoundReport color_by_longest_path(const Digraph& d, const CorollaryOptions& options) {
  const int n = d.vertex_count();
  if (n < 1) throw InputError("digraph must have at least one vertex");
  BoundReport report;
  report.theorem = BoundTheorem::longest_path;
  report.parameter_name = "longest_path_vertices";
  report.parameter = longest_path_vertices(d);
  report.bound = report.parameter;
  report.modulus = report.bound + 1;
  report.residue = 1;

  // Add a vertex joined to everything by opposite arcs; it keeps a color of
  // its own, which is dropped again on restriction.
  std::vector<Arc> arcs = d.arcs();
  for (Vertex v = 0; v < n; ++v) {
    arcs.push_back({n, v});
    arcs.push_back({v, n});
  }
  const Digraph extended(n + 1, arcs);
  Coloring full = guaranteed_mod1(extended, report.modulus, options);
  const int apex = full.colors.back();
  Coloring restricted;
  restricted.kind = ColoringKind::proper;
  for (Vertex v = 0; v < n; ++v) {
    int c = full.colors[static_cast<std::size_t>(v)];
    if (c == apex) throw DefectError("apex color reused inside the digraph");
    restricted.colors.push_back(c == report.bound ? apex : c);
  }
  ColoringVerdict verdict = verify_coloring(d, restricted);
  if (!verdict.valid) throw DefectError("restricted coloring is improper: " + verdict.reason);
  report.witness = std::move(restricted);
  report.method = "ear-decomposition mod 1 on apex extension";
  return report;
}

BoundReport erdos_hajnal(const UndirectedGraph& g, const CorollaryOptions& options) {
  const int l = cycle_stats(bidirect(g), 3).odd_circumference;
  auto colored = color_undirected(g, l + 1, 1, options);
  return from_undirected(BoundTheorem::erdos_hajnal, "odd_circumference", l, l + 1, colored);
}

BoundReport tuza(const UndirectedGraph& g, int k, const CorollaryOptions& options) {
  auto colored = color_undirected(g, k, 1, options);
  return from_undirected(BoundTheorem::tuza, "k", k, k, colored);
}

BoundReport gyarfas(const UndirectedGraph& g, const CorollaryOptions& options) {
  std::vector<int> odd;
  for (int len : cycle_lengths(bidirect(g), 3)) {
    if (len % 2 == 1) odd.push_back(len);
  }
  const int m = static_cast<int>(odd.size());
  const int k = 2 * m + 2;
  // m odd lengths cannot cover the m+1 odd residues mod 2m+2.
  for (int r = 1; r < k; r += 2) {
    bool hit = std::any_of(odd.begin(), odd.end(), [&](int len) { return len % k == r; });
    if (!hit) {
      auto colored = color_undirected(g, k, r, options);
      return from_undirected(BoundTheorem::gyarfas, "odd_cycle_lengths", m, k, colored);
    }
  }
  throw DefectError("no empty odd residue class");
}

BoundReport mihok_schiermeyer(const UndirectedGraph& g, const CorollaryOptions& options) {
  std::vector<int> even;
  for (int len : cycle_lengths(bidirect(g), 3)) {
    if (len % 2 == 0) even.push_back(len);
  }
  const int m = static_cast<int>(even.size());
  const int k = 2 * m + 2;
  std::optional<int> chosen;
  for (int r = 0; r < k; r += 2) {
    bool hit = std::any_of(even.begin(), even.end(), [&](int len) { return len % k == r; });
    if (hit) continue;
    if (!chosen || *chosen == 2) chosen = r;
  }
  if (!chosen) throw DefectError("no empty even residue class");
  auto colored = color_undirected(g, k, *chosen, options);
  return from_undirected(BoundTheorem::mihok_schiermeyer, "even_cycle_lengths", m, k + 1, colored);
}

}  // namespace earcolor
