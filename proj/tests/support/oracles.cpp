#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace earcolor::testing {

namespace {

bool closes(const Digraph& d, const std::vector<Vertex>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!d.has_arc(seq[i], seq[(i + 1) % seq.size()])) return false;
  return true;
}

// All restricted-growth strings of length n: each set partition once.
void for_each_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit) {
  if (n == 0) {
    visit({}, 0);
    return;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<bool(int, int)> rec = [&](int i, int blocks) -> bool {
    if (i == n) return visit(a, blocks);
    for (int c = 0; c <= blocks && c < n; ++c) {
      a[static_cast<std::size_t>(i)] = c;
      if (!rec(i + 1, std::max(blocks, c + 1))) return false;
    }
    return true;
  };
  rec(0, 0);
}

}  // namespace

std::vector<std::vector<Vertex>> naive_cycles(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<Vertex>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    if (members.size() < 2) continue;
    std::vector<Vertex> rest(members.begin() + 1, members.end());
    do {
      std::vector<Vertex> seq{members.front()};
      seq.insert(seq.end(), rest.begin(), rest.end());
      if (closes(d, seq)) out.push_back(seq);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

std::set<int> naive_cycle_lengths(const Digraph& d, int min_length) {
  std::set<int> lengths;
  for (const auto& c : naive_cycles(d))
    if (static_cast<int>(c.size()) >= min_length) lengths.insert(static_cast<int>(c.size()));
  return lengths;
}

std::set<int> naive_residues(const Digraph& d, int k, int min_length) {
  std::set<int> out;
  for (int len : naive_cycle_lengths(d, min_length)) out.insert(len % k);
  return out;
}

bool naive_is_proper(const Digraph& d, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != d.vertex_count()) return false;
  for (int u = 0; u < d.vertex_count(); ++u)
    for (int v = 0; v < d.vertex_count(); ++v)
      if (d.has_arc(u, v) && colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool naive_is_proper(const UndirectedGraph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (const Edge& e : g.edges())
    if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

bool naive_has_cycle(const Digraph& d, std::span<const char> keep) {
  const int n = d.vertex_count();
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(Vertex)> dfs = [&](Vertex v) {
    state[static_cast<std::size_t>(v)] = 1;
    for (Vertex w = 0; w < n; ++w) {
      if (!keep[static_cast<std::size_t>(w)] || !d.has_arc(v, w)) continue;
      if (state[static_cast<std::size_t>(w)] == 1) return true;
      if (state[static_cast<std::size_t>(w)] == 0 && dfs(w)) return true;
    }
    state[static_cast<std::size_t>(v)] = 2;
    return false;
  };
  for (Vertex v = 0; v < n; ++v)
    if (keep[static_cast<std::size_t>(v)] && state[static_cast<std::size_t>(v)] == 0 && dfs(v)) return true;
  return false;
}

bool naive_is_acyclic_coloring(const Digraph& d, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != d.vertex_count()) return false;
  std::set<int> palette(colors.begin(), colors.end());
  for (int c : palette) {
    std::vector<char> keep(colors.size(), 0);
    for (std::size_t v = 0; v < colors.size(); ++v) keep[v] = colors[v] == c;
    if (naive_has_cycle(d, keep)) return false;
  }
  return true;
}

int color_count(std::span<const int> colors) { return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size()); }

int naive_chromatic(const UndirectedGraph& g) {
  int best = g.vertex_count();
  for_each_partition(g.vertex_count(), [&](const std::vector<int>& a, int blocks) {
    if (blocks < best && naive_is_proper(g, a)) best = blocks;
    return true;
  });
  return best;
}

int naive_acyclic_chromatic(const Digraph& d) {
  int best = d.vertex_count();
  for_each_partition(d.vertex_count(), [&](const std::vector<int>& a, int blocks) {
    if (blocks < best && naive_is_acyclic_coloring(d, a)) best = blocks;
    return true;
  });
  return best;
}

bool naive_has_hamiltonian_cycle(const Digraph& d) {
  const int n = d.vertex_count();
  if (n < 2) return false;
  std::vector<Vertex> rest;
  for (int v = 1; v < n; ++v) rest.push_back(v);
  do {
    std::vector<Vertex> seq{0};
    seq.insert(seq.end(), rest.begin(), rest.end());
    if (closes(d, seq)) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

int naive_longest_path_vertices(const Digraph& d) {
  const int n = d.vertex_count();
  int best = n > 0 ? 1 : 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int count) {
    best = std::max(best, count);
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !d.has_arc(v, w)) continue;
      used[static_cast<std::size_t>(w)] = 1;
      dfs(w, count + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    used[static_cast<std::size_t>(v)] = 1;
    dfs(v, 1);
    used[static_cast<std::size_t>(v)] = 0;
  }
  return best;
}

bool naive_strongly_connected(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u) {
    reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = 1;
    for (int v = 0; v < n; ++v)
      if (d.has_arc(u, v)) reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  }
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)] &&
            reach[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)])
          reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  for (const auto& row : reach)
    for (char c : row)
      if (!c) return false;
  return true;
}

std::vector<std::vector<Vertex>> naive_ears(const Digraph& host, std::span<const char> in_di,
                                            const std::vector<std::vector<char>>& arc_in_di) {
  const int n = host.vertex_count();
  std::vector<Vertex> inside;
  std::vector<Vertex> outside;
  for (int v = 0; v < n; ++v) (in_di[static_cast<std::size_t>(v)] ? inside : outside).push_back(v);
  std::vector<std::vector<Vertex>> ears;
  for (Vertex a : inside)
    for (Vertex b : inside)
      if (a != b && host.has_arc(a, b) && !arc_in_di[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        ears.push_back({a, b});
  const auto m = static_cast<unsigned>(outside.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Vertex> interior;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) interior.push_back(outside[i]);
    do {
      bool chain = true;
      for (std::size_t i = 0; i + 1 < interior.size(); ++i) chain = chain && host.has_arc(interior[i], interior[i + 1]);
      if (!chain) continue;
      for (Vertex a : inside) {
        if (!host.has_arc(a, interior.front())) continue;
        for (Vertex b : inside) {
          if (!host.has_arc(interior.back(), b)) continue;
          std::vector<Vertex> ear{a};
          ear.insert(ear.end(), interior.begin(), interior.end());
          ear.push_back(b);
          ears.push_back(std::move(ear));
        }
      }
    } while (std::next_permutation(interior.begin(), interior.end()));
  }
  std::sort(ears.begin(), ears.end());
  return ears;
}

}  // namespace earcolor::testing
