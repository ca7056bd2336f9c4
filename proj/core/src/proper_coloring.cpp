#include "earcolor/proper_coloring.hpp"

#include <string>

#include "earcolor/error.hpp"

namespace earcolor {

std::vector<int> proper_priority(int k) { return descending_residues(k, 0, 1); }

Diagnostic assert_AB(const EarState& state, const EarSearchLimits& limits) {
  for (const Arc& a : state.arcs()) {
    if (state.f(a.tail) == state.f(a.head)) {
      return Diagnostic::fail("(A): arc of D_i is monochromatic", std::nullopt, a);
    }
  }
  std::optional<Diagnostic> failure;
  for_each_ear(
      state,
      [&](std::span<const Vertex> path) {
        if (failure) return;
        Ear ear{std::vector<Vertex>(path.begin(), path.end())};
        if (residue_of_ear(state, ear) == 1 % state.modulus()) {
          failure = Diagnostic::fail("(B): ear has residue 1", std::move(ear));
        }
      },
      limits);
  return failure ? *failure : Diagnostic::pass();
}

namespace {

void audit_or_throw(const EarState& state, const ProperColoringOptions& options) {
  if (!options.audit) return;
  Diagnostic diagnostic = assert_AB(state, options.ear_limits);
  if (!diagnostic.ok) throw DefectError("proper construction invariant: " + diagnostic.violation);
}

}  // namespace

ProperColoringRun color_mod1(const Digraph& d, int k, const ProperColoringOptions& options) {
  normalize_residue(0, k);
  if (d.vertex_count() < 2) throw InputError("digraph must have at least two vertices");
  if (!strongly_connected(d)) throw InputError("digraph must be strongly connected");

  const ResidueCensus census = residue_census(d, k, options.census);
  const int forbidden = 1 % k;
  if (options.check_hypothesis && census.realized(forbidden)) {
    throw HypothesisViolated("digraph has a cycle of length 1 mod " + std::to_string(k),
                             census.witnesses[static_cast<std::size_t>(forbidden)]->vertices);
  }
  const std::vector<int> priority = proper_priority(k);

  ProperColoringRun run;
  run.modulus = k;
  bool seeded = false;
  for (int t : priority) {
    if (census.realized(t)) {
      run.seed_residue = t;
      run.seed = *census.witnesses[static_cast<std::size_t>(t)];
      seeded = true;
      break;
    }
  }
  if (!seeded) {
    throw HypothesisViolated("every cycle has length 1 mod " + std::to_string(k),
                             census.witnesses[static_cast<std::size_t>(forbidden)]->vertices);
  }

  std::vector<int> seed_f;
  for (std::size_t p = 0; p < run.seed.vertices.size(); ++p) seed_f.push_back(static_cast<int>(p) % k);
  EarState state = EarState::seed(d, k, run.seed, seed_f);
  if (options.on_state) options.on_state(state);
  audit_or_throw(state, options);

  while (!state.complete()) {
    const std::vector<Ear> ears = enumerate_ears(state, options.ear_limits);
    if (ears.empty()) throw DefectError("strong host has no ear of a proper subdigraph");
    auto choice = first_nonempty_class(ears, state, priority);
    if (!choice) throw DefectError("every ear has residue 1; properties (A)/(B) cannot be maintained");
    if (options.audit) {
      const int above = (choice->residue + 1) % k;
      for (const Ear& ear : ears) {
        if (residue_of_ear(state, ear) == above) {
          throw DefectError("class above the chosen ear class is nonempty");
        }
      }
    }
    const Ear& ear = choice->ear;
    const int base = state.f(ear.origin());
    std::vector<int> interior_f;
    for (int r = 1; r < ear.length(); ++r) interior_f.push_back((base + r) % k);
    state = extend(state, ear, interior_f);
    run.steps.push_back({choice->residue, ear});
    if (options.on_state) options.on_state(state);
    audit_or_throw(state, options);
  }

  run.result.kind = ColoringKind::proper;
  run.result.colors.assign(state.f_values().begin(), state.f_values().end());
  ColoringVerdict verdict = verify_coloring(d, run.result);
  if (!verdict.valid) throw DefectError("ear construction produced an improper coloring: " + verdict.reason);
  return run;
}

}  // namespace earcolor
