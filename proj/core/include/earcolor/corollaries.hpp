#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "earcolor/acyclic_coloring.hpp"
#include "earcolor/coloring.hpp"
#include "earcolor/cycles.hpp"
#include "earcolor/digraph.hpp"
#include "earcolor/ears.hpp"

namespace earcolor {

struct CorollaryOptions {
  CensusOptions census;
  EarSearchLimits ear_limits;
  int oracle_vertices = kDefaultOracleVertices;
};

enum class UndirectedMethod {
  bipartite,            // k = 2, no odd cycle
  odd_blocks,           // k = 2, no even cycle: every block is an edge or an odd cycle
  acyclic_bidirection,  // acyclic coloring of the bidirected graph
  exact_fallback,       // r = 2 (mod k), k >= 3: exact (k+1)-coloring search
};

const char* to_string(UndirectedMethod method);

struct UndirectedColoring {
  Coloring coloring;
  int bound = 0;
  int modulus = 0;
  int residue = 0;
  UndirectedMethod method = UndirectedMethod::acyclic_bidirection;
};

// Proper coloring of a graph without cycles of length r (mod k): k colors
// when r != 2 (mod k), k + 1 otherwise. Only cycles of length >= 3 count.
// Throws HypothesisViolated with a witness cycle when the hypothesis fails
// and ResourceLimitExceeded when the exact fallback is above the oracle bound.
UndirectedColoring color_undirected(const UndirectedGraph& g, int k, int r, const CorollaryOptions& options = {});

// 3-coloring of a graph whose blocks are all edges or odd cycles, at most
// 2 colors on forests. Throws InputError for any other block.
std::vector<int> color_odd_blocks(const UndirectedGraph& g);

// 2-coloring of a bipartite graph; nullopt if an odd cycle exists.
std::optional<std::vector<int>> two_color(const UndirectedGraph& g);

enum class BoundTheorem {
  odd_circumference,
  circumference,
  longest_path,
  erdos_hajnal,
  tuza,
  gyarfas,
  mihok_schiermeyer,
};

// Names used on the command line: odd-circ, circ, longest-path,
// erdos-hajnal, tuza, gyarfas, mihok-schiermeyer.
const char* to_string(BoundTheorem theorem);
std::optional<BoundTheorem> parse_bound_theorem(std::string_view name);
bool takes_undirected_input(BoundTheorem theorem);

struct BoundReport {
  BoundTheorem theorem = BoundTheorem::odd_circumference;
  std::string parameter_name;
  int parameter = 0;
  int bound = 0;
  // The (modulus, residue) the witness was constructed for.
  int modulus = 0;
  int residue = 0;
  std::optional<Coloring> witness;
  std::string method;
};

// chi(D) <= l(D) + 1 for strong nontrivial D.
BoundReport color_by_odd_circumference(const Digraph& d, const CorollaryOptions& options = {});
// chi(D) <= circumference for strong nontrivial D.
BoundReport color_by_circumference(const Digraph& d, const CorollaryOptions& options = {});
// chi(D) <= vertices on a longest path, any D with n >= 1.
BoundReport color_by_longest_path(const Digraph& d, const CorollaryOptions& options = {});

// chi(G) <= l(G) + 1.
BoundReport erdos_hajnal(const UndirectedGraph& g, const CorollaryOptions& options = {});
// chi(G) <= k when no cycle length is 1 (mod k).
BoundReport tuza(const UndirectedGraph& g, int k, const CorollaryOptions& options = {});
// chi(G) <= 2|L_o(G)| + 2.
BoundReport gyarfas(const UndirectedGraph& g, const CorollaryOptions& options = {});
// chi(G) <= 2|L_e(G)| + 3.
BoundReport mihok_schiermeyer(const UndirectedGraph& g, const CorollaryOptions& options = {});

}  // namespace earcolor
