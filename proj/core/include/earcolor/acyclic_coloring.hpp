#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "earcolor/coloring.hpp"
#include "earcolor/cycles.hpp"
#include "earcolor/digraph.hpp"
#include "earcolor/ears.hpp"

namespace earcolor {

// Total order on the vertices of D_i. New vertices are inserted as a block
// next to an existing vertex; the relative order of existing vertices never
// changes.
class LinearOrder {
 public:
  LinearOrder() = default;
  LinearOrder(int host_vertices, std::vector<Vertex> sequence);

  bool contains(Vertex v) const;
  // Throws InputError for vertices outside the order.
  int position(Vertex v) const;
  bool precedes(Vertex a, Vertex b) const { return position(a) < position(b); }
  std::optional<Vertex> successor(Vertex v) const;
  std::optional<Vertex> predecessor(Vertex v) const;

  void insert_after(Vertex anchor, std::span<const Vertex> block);
  void insert_before(Vertex anchor, std::span<const Vertex> block);

  const std::vector<Vertex>& sequence() const { return sequence_; }
  int size() const { return static_cast<int>(sequence_.size()); }

 private:
  void insert_at(std::size_t index, std::span<const Vertex> block);

  std::vector<Vertex> sequence_;
  std::vector<int> position_;  // -1 when absent
};

// Forbidden backward-ear residue for each pair (earlier, later) of D_i:
// no backward D_i-ear from `later` to `earlier` has length alpha (mod k).
// Kept for every pair, not only the pairs that currently have backward ears.
class AlphaTable {
 public:
  AlphaTable() = default;
  AlphaTable(int host_vertices, int k);

  void set(Vertex earlier, Vertex later, int value);
  bool defined(Vertex earlier, Vertex later) const;
  // Throws DefectError when the pair has no entry.
  int at(Vertex earlier, Vertex later) const;
  std::size_t size() const { return defined_count_; }
  int modulus() const { return k_; }

 private:
  std::size_t index(Vertex earlier, Vertex later) const;

  int n_ = 0;
  int k_ = 2;
  std::size_t defined_count_ = 0;
  std::vector<int> values_;
};

enum class EarDirection { forward, backward, cyclic };

const char* to_string(EarDirection direction);

// Forward when origin precedes terminus, backward when it succeeds it,
// cyclic when they coincide. Throws InputError for endpoints not in `order`.
EarDirection classify_ear(const LinearOrder& order, const Ear& ear);

enum class Branch { forward, cyclic, backward };

const char* to_string(Branch branch);

struct AcyclicStep {
  Branch branch = Branch::forward;
  int residue = 0;  // class s
  Ear ear;
  std::optional<std::pair<Vertex, Vertex>> backward_pair;  // (x, y), x earlier
  std::optional<int> pair_alpha;                           // alpha(x, y)
};

// Construction for one nontrivial strong component, in host vertex ids.
struct ComponentRun {
  std::vector<Vertex> vertices;
  VertexCycle seed;
  int seed_residue = 0;
  std::vector<Vertex> order;
  std::vector<AcyclicStep> steps;
};

struct AcyclicColoringRun {
  int modulus = 0;
  int residue = 0;  // normalized r
  Coloring result;
  std::vector<ComponentRun> components;
  // Component orders concatenated in condensation order; trivial components
  // contribute their single vertex.
  std::vector<Vertex> order;
};

// Read-only view of the construction after an extension step.
struct AcyclicStateView {
  const EarState& state;
  const LinearOrder& order;
  const AlphaTable& alpha;
  const AcyclicStep* step;  // null for the seed
};

struct AcyclicColoringOptions {
  bool check_hypothesis = true;
  // After every extension re-derive all ears and check (A), (B), (C) plus
  // the emptiness of the class above the chosen one. Throws DefectError.
  bool audit = false;
  CensusOptions census;
  EarSearchLimits ear_limits;
  std::function<void(const AcyclicStateView&)> on_state;  // component-local ids
};

// Priority of seed classes: r-1, r-2, ..., 0, k-1, ..., r+1.
std::vector<int> acyclic_seed_priority(int k, int r);
// Forward classes by f-residue: 0, k-1, ..., 2.
std::vector<int> forward_priority(int k);
// Cyclic classes by length residue: r-1, ..., r+1.
std::vector<int> cyclic_priority(int k, int r);
// Backward classes for a pair with forbidden residue alpha: alpha-1, ..., alpha+1.
std::vector<int> backward_priority(int k, int alpha);

// Acyclic k-coloring of a digraph without cycles of length r (mod k). Each
// nontrivial strong component is colored by its own ear decomposition with a
// linear order in which every monochromatic arc points backward.
AcyclicColoringRun acyclic_color(const Digraph& d, int k, int r, const AcyclicColoringOptions& options = {});

// Exhaustive check: (A) no forward arc of D_i is monochromatic, (B) no
// forward ear has f-residue 1, (C) no backward ear from b to a has length
// alpha(a, b) (mod k).
Diagnostic assert_ABC(const EarState& state, const LinearOrder& order, const AlphaTable& alpha,
                      const EarSearchLimits& limits = {});

}  // namespace earcolor
