#include "earcolor/cycles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "earcolor/error.hpp"

namespace earcolor {

int normalize_residue(int r, int k) {
  if (k < 2) throw InputError("modulus must be at least 2, got " + std::to_string(k));
  return ((r % k) + k) % k;
}

namespace {

class JohnsonSearch {
 public:
  JohnsonSearch(const Digraph& d, const std::function<bool(std::span<const Vertex>)>& visit)
      : d_(d),
        visit_(visit),
        n_(d.vertex_count()),
        in_component_(static_cast<std::size_t>(n_), 0),
        blocked_(static_cast<std::size_t>(n_), 0),
        block_lists_(static_cast<std::size_t>(n_)) {}

  bool run() {
    for (Vertex s = 0; s < n_ && !stopped_; ++s) {
      if (!select_component(s)) continue;
      start_ = s;
      for (Vertex v = 0; v < n_; ++v) {
        blocked_[static_cast<std::size_t>(v)] = 0;
        block_lists_[static_cast<std::size_t>(v)].clear();
      }
      circuit(s);
    }
    return !stopped_;
  }

 private:
  // Marks the strong component of s within D[{s, s+1, ...}]. Returns false
  // when that component is trivial.
  bool select_component(Vertex s) {
    std::vector<Vertex> subset;
    for (Vertex v = s; v < n_; ++v) subset.push_back(v);
    auto sub = induced_subdigraph(d_, subset);
    std::fill(in_component_.begin(), in_component_.end(), 0);
    for (const auto& component : strong_components(sub.graph)) {
      if (component.front() != 0) continue;  // index 0 is s
      if (component.size() < 2) return false;
      for (Vertex v : component) in_component_[static_cast<std::size_t>(sub.to_host[static_cast<std::size_t>(v)])] = 1;
      return true;
    }
    return false;
  }

  void unblock(Vertex v) {
    blocked_[static_cast<std::size_t>(v)] = 0;
    auto& list = block_lists_[static_cast<std::size_t>(v)];
    while (!list.empty()) {
      Vertex w = list.back();
      list.pop_back();
      if (blocked_[static_cast<std::size_t>(w)]) unblock(w);
    }
  }

  bool circuit(Vertex v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : d_.out_neighbors(v)) {
      if (stopped_) break;
      if (!in_component_[static_cast<std::size_t>(w)]) continue;
      if (w == start_) {
        found = true;
        if (!visit_(stack_)) stopped_ = true;
      } else if (!blocked_[static_cast<std::size_t>(w)]) {
        if (circuit(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (Vertex w : d_.out_neighbors(v)) {
        if (!in_component_[static_cast<std::size_t>(w)]) continue;
        auto& list = block_lists_[static_cast<std::size_t>(w)];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  const Digraph& d_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  int n_;
  Vertex start_ = 0;
  bool stopped_ = false;
  std::vector<char> in_component_;
  std::vector<char> blocked_;
  std::vector<std::vector<Vertex>> block_lists_;
  std::vector<Vertex> stack_;
};

void require_subset_search(const Digraph& d) {
  if (d.vertex_count() > kMaxSubsetSearchVertices) {
    throw ResourceLimitExceeded("exhaustive path search supports at most " +
                                std::to_string(kMaxSubsetSearchVertices) + " vertices, got " +
                                std::to_string(d.vertex_count()));
  }
}

std::vector<std::uint32_t> out_masks(const Digraph& d) {
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(d.vertex_count()), 0);
  for (const Arc& a : d.arcs()) masks[static_cast<std::size_t>(a.tail)] |= 1u << a.head;
  return masks;
}

}  // namespace

bool for_each_cycle(const Digraph& d, const std::function<bool(std::span<const Vertex>)>& visit) {
  return JohnsonSearch(d, visit).run();
}

CycleEnumeration enumerate_cycles(const Digraph& d, std::optional<std::size_t> limit) {
  CycleEnumeration result;
  bool complete = for_each_cycle(d, [&](std::span<const Vertex> cycle) {
    if (limit && result.cycles.size() >= *limit) return false;
    result.cycles.push_back(VertexCycle{std::vector<Vertex>(cycle.begin(), cycle.end())});
    return true;
  });
  result.truncated = !complete;
  return result;
}

std::vector<int> ResidueCensus::realized_residues() const {
  std::vector<int> result;
  for (int j = 0; j < modulus; ++j) {
    if (realized(j)) result.push_back(j);
  }
  return result;
}

ResidueCensus residue_census(const Digraph& d, int k, const CensusOptions& options) {
  normalize_residue(0, k);
  ResidueCensus census;
  census.modulus = k;
  census.witnesses.assign(static_cast<std::size_t>(k), std::nullopt);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
  int missing = k;
  std::size_t seen = 0;
  bool capped = false;
  bool complete = for_each_cycle(d, [&](std::span<const Vertex> cycle) {
    if (seen == options.max_cycles) {
      capped = true;
      return false;
    }
    ++seen;
    const int length = static_cast<int>(cycle.size());
    if (length < options.min_length) return true;
    const auto j = static_cast<std::size_t>(length % k);
    ++counts[j];
    if (!census.witnesses[j]) {
      census.witnesses[j] = VertexCycle{std::vector<Vertex>(cycle.begin(), cycle.end())};
      --missing;
    }
    return missing > 0;
  });
  if (capped && missing > 0) {
    throw ResourceLimitExceeded("residue census undecided after " + std::to_string(options.max_cycles) +
                                " cycles");
  }
  if (complete) census.counts = std::move(counts);
  return census;
}

HypothesisVerdict hypothesis_holds(const Digraph& d, int k, int r, const CensusOptions& options) {
  HypothesisVerdict verdict;
  verdict.modulus = k;
  verdict.residue = normalize_residue(r, k);
  std::size_t seen = 0;
  bool capped = false;
  for_each_cycle(d, [&](std::span<const Vertex> cycle) {
    if (seen == options.max_cycles) {
      capped = true;
      return false;
    }
    ++seen;
    const int length = static_cast<int>(cycle.size());
    if (length >= options.min_length && length % k == verdict.residue) {
      verdict.witness = VertexCycle{std::vector<Vertex>(cycle.begin(), cycle.end())};
      return false;
    }
    return true;
  });
  if (capped) {
    throw ResourceLimitExceeded("hypothesis undecided after " + std::to_string(options.max_cycles) + " cycles");
  }
  verdict.holds = !verdict.witness.has_value();
  return verdict;
}

std::vector<int> cycle_lengths(const Digraph& d, int min_length) {
  require_subset_search(d);
  const int n = d.vertex_count();
  if (n == 0) return {};
  const auto out = out_masks(d);
  // ends[mask]: vertices v such that a path from min(mask) through exactly
  // `mask` ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  std::vector<char> realized(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int s = std::countr_zero(mask);
    if (mask == (1u << s)) ends[mask] = mask;
    std::uint32_t frontier = ends[mask];
    bool closes = false;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (out[static_cast<std::size_t>(v)] & (1u << s)) closes = true;
      // Extend only by vertices above s so the start stays the minimum.
      std::uint32_t next = out[static_cast<std::size_t>(v)] & ~mask & ~((2u << s) - 1);
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
    const int size = std::popcount(mask);
    if (closes && size >= 2) realized[static_cast<std::size_t>(size)] = 1;
  }
  std::vector<int> lengths;
  for (int len = std::max(2, min_length); len <= n; ++len) {
    if (realized[static_cast<std::size_t>(len)]) lengths.push_back(len);
  }
  return lengths;
}

int longest_path_vertices(const Digraph& d) {
  require_subset_search(d);
  const int n = d.vertex_count();
  if (n == 0) return 0;
  const auto out = out_masks(d);
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  int best = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t frontier = ends[mask];
    if (!frontier) continue;
    best = std::max(best, std::popcount(mask));
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t next = out[static_cast<std::size_t>(v)] & ~mask;
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return best;
}

CycleStats cycle_stats(const Digraph& d, int min_cycle_length) {
  CycleStats stats;
  for (int len : cycle_lengths(d, min_cycle_length)) {
    stats.circumference = std::max(stats.circumference, len);
    if (len % 2 == 1) stats.odd_circumference = std::max(stats.odd_circumference, len);
  }
  stats.longest_path_vertices = longest_path_vertices(d);
  return stats;
}

namespace {

void require_oracle_bound(int n, int max_vertices) {
  if (n > max_vertices) {
    throw ResourceLimitExceeded("exact coloring oracle bound is " + std::to_string(max_vertices) +
                                " vertices, got " + std::to_string(n));
  }
}

class ProperColoringSearch {
 public:
  ProperColoringSearch(const UndirectedGraph& g, int colors)
      : g_(g), colors_(colors), assignment_(static_cast<std::size_t>(g.vertex_count()), -1) {}

  std::optional<std::vector<int>> run() {
    if (colors_ <= 0) {
      if (g_.vertex_count() == 0) return std::vector<int>{};
      return std::nullopt;
    }
    if (assign(0, 0)) return assignment_;
    return std::nullopt;
  }

 private:
  // DSatur-style: branch on the uncolored vertex with most distinct neighbor
  // colors; new colors are opened one at a time to break symmetry.
  bool assign(int colored, int used) {
    const int n = g_.vertex_count();
    if (colored == n) return true;
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (assignment_[static_cast<std::size_t>(v)] != -1) continue;
      std::uint64_t seen = 0;
      int degree = 0;
      for (Vertex w : g_.neighbors(v)) {
        int c = assignment_[static_cast<std::size_t>(w)];
        if (c >= 0) seen |= std::uint64_t{1} << c;
        else ++degree;
      }
      int sat = std::popcount(seen);
      if (sat > best_sat || (sat == best_sat && degree > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = degree;
      }
    }
    std::uint64_t forbidden = 0;
    for (Vertex w : g_.neighbors(pick)) {
      int c = assignment_[static_cast<std::size_t>(w)];
      if (c >= 0) forbidden |= std::uint64_t{1} << c;
    }
    const int limit = std::min(colors_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden & (std::uint64_t{1} << c)) continue;
      assignment_[static_cast<std::size_t>(pick)] = c;
      if (assign(colored + 1, std::max(used, c + 1))) return true;
    }
    assignment_[static_cast<std::size_t>(pick)] = -1;
    return false;
  }

  const UndirectedGraph& g_;
  int colors_;
  std::vector<int> assignment_;
};

std::vector<int> greedy_coloring(const UndirectedGraph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<char> taken(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      int c = colors[static_cast<std::size_t>(w)];
      if (c >= 0) taken[static_cast<std::size_t>(c)] = 1;
    }
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    colors[static_cast<std::size_t>(v)] = c;
  }
  return colors;
}

int max_clique(std::uint64_t candidates, const std::vector<std::uint64_t>& adj, int size, int best) {
  if (candidates == 0) return std::max(size, best);
  if (size + std::popcount(candidates) <= best) return best;
  while (candidates) {
    if (size + std::popcount(candidates) <= best) break;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(candidates & adj[static_cast<std::size_t>(v)], adj, size + 1, best);
  }
  return std::max(best, size);
}

}  // namespace

int clique_number(const UndirectedGraph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw ResourceLimitExceeded("clique search supports at most 64 vertices");
  if (n == 0) return 0;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return max_clique(all, adj, 0, 0);
}

std::optional<std::vector<int>> find_coloring(const UndirectedGraph& g, int colors, int max_vertices) {
  require_oracle_bound(g.vertex_count(), max_vertices);
  return ProperColoringSearch(g, std::min(colors, 64)).run();
}

std::vector<int> exact_coloring(const UndirectedGraph& g, int max_vertices) {
  require_oracle_bound(g.vertex_count(), max_vertices);
  if (g.vertex_count() == 0) return {};
  std::vector<int> best = greedy_coloring(g);
  const int upper = *std::max_element(best.begin(), best.end()) + 1;
  for (int k = std::max(1, clique_number(g)); k < upper; ++k) {
    if (auto found = ProperColoringSearch(g, k).run()) return *found;
  }
  return best;
}

int exact_chromatic(const UndirectedGraph& g, int max_vertices) {
  auto colors = exact_coloring(g, max_vertices);
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

namespace {

class AcyclicColoringSearch {
 public:
  AcyclicColoringSearch(const Digraph& d, int colors)
      : n_(d.vertex_count()), colors_(colors), out_(static_cast<std::size_t>(n_), 0),
        classes_(static_cast<std::size_t>(colors), 0), assignment_(static_cast<std::size_t>(n_), -1) {
    for (const Arc& a : d.arcs()) out_[static_cast<std::size_t>(a.tail)] |= std::uint64_t{1} << a.head;
  }

  std::optional<std::vector<int>> run() {
    if (assign(0, 0)) return assignment_;
    return std::nullopt;
  }

 private:
  // Adding v to `members` closes a cycle iff v reaches itself inside it.
  bool closes_cycle(Vertex v, std::uint64_t members) const {
    const std::uint64_t inside = members | (std::uint64_t{1} << v);
    std::uint64_t reached = 0;
    std::uint64_t frontier = out_[static_cast<std::size_t>(v)] & inside;
    while (frontier) {
      if (frontier & (std::uint64_t{1} << v)) return true;
      reached |= frontier;
      std::uint64_t next = 0;
      while (frontier) {
        const int w = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= out_[static_cast<std::size_t>(w)];
      }
      frontier = next & inside & ~(reached & ~(std::uint64_t{1} << v));
    }
    return false;
  }

  bool assign(Vertex v, int used) {
    if (v == n_) return true;
    const int limit = std::min(colors_, used + 1);
    for (int c = 0; c < limit; ++c) {
      auto& members = classes_[static_cast<std::size_t>(c)];
      if (closes_cycle(v, members)) continue;
      members |= std::uint64_t{1} << v;
      assignment_[static_cast<std::size_t>(v)] = c;
      if (assign(v + 1, std::max(used, c + 1))) return true;
      members &= ~(std::uint64_t{1} << v);
    }
    assignment_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  int n_;
  int colors_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> classes_;
  std::vector<int> assignment_;
};

}  // namespace

std::vector<int> exact_acyclic_coloring(const Digraph& d, int max_vertices) {
  require_oracle_bound(d.vertex_count(), max_vertices);
  if (d.vertex_count() > 64) throw ResourceLimitExceeded("acyclic coloring search supports at most 64 vertices");
  if (d.vertex_count() == 0) return {};
  for (int k = 1;; ++k) {
    if (auto found = AcyclicColoringSearch(d, k).run()) return *found;
  }
}

int exact_acyclic_chromatic(const Digraph& d, int max_vertices) {
  auto colors = exact_acyclic_coloring(d, max_vertices);
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace earcolor
