#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "earcolor/digraph.hpp"

namespace earcolor {

inline constexpr std::size_t kDefaultMaxEarPaths = 1'000'000;

// A D_i-ear: either a path whose ends lie in D_i and whose interior avoids
// it, or a cycle meeting D_i in exactly one vertex (origin == terminus).
struct Ear {
  std::vector<Vertex> path;  // origin first, terminus last

  Vertex origin() const { return path.front(); }
  Vertex terminus() const { return path.back(); }
  int length() const { return static_cast<int>(path.size()) - 1; }
  bool is_cycle_ear() const { return path.front() == path.back(); }
  std::span<const Vertex> internal() const {
    return std::span<const Vertex>(path).subspan(1, path.size() - 2);
  }

  // Lexicographic on the vertex sequence.
  friend auto operator<=>(const Ear&, const Ear&) = default;
};

struct EarSearchLimits {
  // Partial paths the DFS may visit per enumeration. Exceeding it is a hard
  // error: a truncated enumeration could misjudge class emptiness.
  std::size_t max_paths = kDefaultMaxEarPaths;
};

// The growing subdigraph D_i of an ear decomposition together with the
// residue potential f on its vertices. Holds a non-owning pointer to the
// host, which must outlive the state.
class EarState {
 public:
  // D_0 = `cycle`; f_values[j] is the value of f at cycle.vertices[j].
  static EarState seed(const Digraph& host, int k, const VertexCycle& cycle, std::span<const int> f_values);

  const Digraph& host() const { return *host_; }
  int modulus() const { return k_; }

  bool contains(Vertex v) const { return in_[static_cast<std::size_t>(v)] != 0; }
  bool contains_arc(Vertex tail, Vertex head) const;
  // Throws InputError for vertices outside D_i.
  int f(Vertex v) const;
  std::span<const int> f_values() const { return f_; }  // -1 outside D_i

  std::size_t vertex_count() const { return vertices_in_; }
  std::size_t arc_count() const { return arcs_in_; }
  std::vector<Vertex> vertices() const;
  std::vector<Arc> arcs() const;
  bool complete() const;

  const VertexCycle& seed_cycle() const { return seed_; }
  const std::vector<Ear>& ears_added() const { return log_; }

  // D_i as a digraph on its own vertices (ascending host order).
  InducedSubdigraph as_digraph() const;

  // Copy with f overwritten at one vertex; used to exercise the diagnostics.
  EarState with_f(Vertex v, int value) const;

  friend EarState extend(const EarState& state, const Ear& ear, std::span<const int> f_values);

 private:
  EarState() = default;

  const Digraph* host_ = nullptr;
  int k_ = 0;
  std::vector<char> in_;
  std::vector<int> f_;
  std::vector<char> arc_in_;  // n*n membership matrix
  std::size_t vertices_in_ = 0;
  std::size_t arcs_in_ = 0;
  VertexCycle seed_;
  std::vector<Ear> log_;
};

// (|P| - (f(v) - f(u))) mod k; for a cycle-ear this is |P| mod k.
int residue_of_ear(const EarState& state, const Ear& ear);

// Visits every D_i-ear of the host once: arcs joining D_i vertices that are
// not yet in D_i, then detours through V \ V(D_i), grouped by origin in
// ascending order. Throws ResourceLimitExceeded past the path cap.
void for_each_ear(const EarState& state, const std::function<void(std::span<const Vertex>)>& visit,
                  const EarSearchLimits& limits = {});

std::vector<Ear> enumerate_ears(const EarState& state, const EarSearchLimits& limits = {});

struct ClassChoice {
  int residue = 0;
  Ear ear;
};

using EarFilter = std::function<bool(const Ear&)>;
using EarResidue = std::function<int(const Ear&)>;

// Scans `priority` in order and returns the first residue class holding an
// ear that passes `filter`, with the lexicographically least such ear.
// `residue` defaults to residue_of_ear.
std::optional<ClassChoice> first_nonempty_class(std::span<const Ear> ears, const EarState& state,
                                                std::span<const int> priority, const EarFilter& filter = {},
                                                const EarResidue& residue = {});

// D_{i+1} = D_i plus `ear`, f extended to the interior by `f_values`.
// Throws InputError when `ear` is not a D_i-ear or the arity is wrong, and
// DefectError if strong connectivity is lost.
EarState extend(const EarState& state, const Ear& ear, std::span<const int> f_values);

// Outcome of an invariant audit.
struct Diagnostic {
  bool ok = true;
  std::string violation;
  std::optional<Ear> ear;
  std::optional<Arc> arc;

  static Diagnostic pass() { return {}; }
  static Diagnostic fail(std::string what, std::optional<Ear> ear = std::nullopt,
                         std::optional<Arc> arc = std::nullopt) {
    return Diagnostic{false, std::move(what), std::move(ear), arc};
  }
};

// Priority lists as explicit residue vectors.
// Descending from `start` modulo k, omitting `skip`: start, start-1, ...
std::vector<int> descending_residues(int k, int start, int skip);

}  // namespace earcolor
