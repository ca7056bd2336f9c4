#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "earcolor/digraph.hpp"

namespace earcolor {

inline constexpr std::size_t kDefaultMaxCycles = 1'000'000;
// Subset dynamic programs (cycle lengths, longest paths) refuse above this.
inline constexpr int kMaxSubsetSearchVertices = 20;
// Exact chromatic searches refuse above this unless told otherwise.
inline constexpr int kDefaultOracleVertices = 12;

// Maps any integer residue into 0..k-1. Throws InputError when k < 2.
int normalize_residue(int r, int k);

// Johnson's algorithm. `visit` receives each simple cycle once, in canonical
// rotation; returning false stops the enumeration. Cycles are produced in
// ascending order of their minimum vertex, then in DFS order over sorted
// adjacency. Returns whether the enumeration ran to completion.
bool for_each_cycle(const Digraph& d, const std::function<bool(std::span<const Vertex>)>& visit);

struct CycleEnumeration {
  std::vector<VertexCycle> cycles;
  bool truncated = false;
};

CycleEnumeration enumerate_cycles(const Digraph& d, std::optional<std::size_t> limit = std::nullopt);

struct CensusOptions {
  std::size_t max_cycles = kDefaultMaxCycles;
  // Cycles shorter than this are ignored. Undirected graphs given as their
  // bidirection use 3 so that the 2-cycles of each edge do not count.
  int min_length = 2;
};

struct ResidueCensus {
  int modulus = 0;
  std::vector<std::optional<VertexCycle>> witnesses;       // indexed by residue
  std::optional<std::vector<std::uint64_t>> counts;        // only after a full enumeration

  bool realized(int residue) const { return witnesses.at(static_cast<std::size_t>(residue)).has_value(); }
  std::vector<int> realized_residues() const;
};

// Stops as soon as every residue has a witness. Throws ResourceLimitExceeded
// when the cycle cap is reached before the census is decided.
ResidueCensus residue_census(const Digraph& d, int k, const CensusOptions& options = {});

struct HypothesisVerdict {
  bool holds = false;
  int modulus = 0;
  int residue = 0;  // normalized
  std::optional<VertexCycle> witness;  // present iff !holds
};

// Whether d has no cycle of length r (mod k). r is reduced into 0..k-1.
HypothesisVerdict hypothesis_holds(const Digraph& d, int k, int r, const CensusOptions& options = {});

struct CycleStats {
  int circumference = 0;          // 0 when acyclic
  int odd_circumference = 1;      // 1 when no odd cycle
  int longest_path_vertices = 0;  // 0 only for the empty digraph
};

// Exact values by subset dynamic programming; n <= kMaxSubsetSearchVertices.
CycleStats cycle_stats(const Digraph& d, int min_cycle_length = 2);

// Sorted set of lengths >= min_length realized by simple cycles.
std::vector<int> cycle_lengths(const Digraph& d, int min_length = 2);

int longest_path_vertices(const Digraph& d);

// Exact search with greedy upper and clique lower bounds. Throws
// ResourceLimitExceeded above `max_vertices`.
std::vector<int> exact_coloring(const UndirectedGraph& g, int max_vertices = kDefaultOracleVertices);
int exact_chromatic(const UndirectedGraph& g, int max_vertices = kDefaultOracleVertices);
// Finds a proper coloring with at most `colors` colors, if one exists.
std::optional<std::vector<int>> find_coloring(const UndirectedGraph& g, int colors,
                                              int max_vertices = kDefaultOracleVertices);

std::vector<int> exact_acyclic_coloring(const Digraph& d, int max_vertices = kDefaultOracleVertices);
int exact_acyclic_chromatic(const Digraph& d, int max_vertices = kDefaultOracleVertices);

int clique_number(const UndirectedGraph& g);

}  // namespace earcolor
