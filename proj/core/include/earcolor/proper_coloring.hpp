#pragma once

#include <functional>
#include <vector>

#include "earcolor/coloring.hpp"
#include "earcolor/cycles.hpp"
#include "earcolor/digraph.hpp"
#include "earcolor/ears.hpp"

namespace earcolor {

struct ProperStep {
  int residue = 0;  // class s the ear was drawn from
  Ear ear;
};

struct ProperColoringRun {
  int modulus = 0;
  Coloring result;
  VertexCycle seed;
  int seed_residue = 0;  // class t of the seed cycle
  std::vector<ProperStep> steps;
};

struct ProperColoringOptions {
  bool check_hypothesis = true;
  // Re-derive all ears after every extension and check (A), (B) and the
  // emptiness of the class after the chosen one. Failures throw DefectError.
  bool audit = false;
  CensusOptions census;
  EarSearchLimits ear_limits;
  // Called with every state of the decomposition, seed included.
  std::function<void(const EarState&)> on_state;
};

// Residue priority shared by the seed and ear choices: 0, k-1, ..., 2.
std::vector<int> proper_priority(int k);

// Proper k-coloring of a strong digraph without cycles of length 1 (mod k),
// built along an ear decomposition that keeps every arc of D_i bichromatic
// and every D_i-ear off residue 1.
//
// Throws InputError if d is trivial or not strong, HypothesisViolated when
// a cycle of length 1 (mod k) is found, DefectError if an invariant that
// the construction guarantees fails.
ProperColoringRun color_mod1(const Digraph& d, int k, const ProperColoringOptions& options = {});

// Exhaustive check of (A) on the arcs of D_i and (B) on every D_i-ear.
Diagnostic assert_AB(const EarState& state, const EarSearchLimits& limits = {});

}  // namespace earcolor
