#include "earcolor/acyclic_coloring.hpp"

#include <algorithm>
#include <string>

#include "earcolor/error.hpp"

namespace earcolor {

LinearOrder::LinearOrder(int host_vertices, std::vector<Vertex> sequence)
    : position_(static_cast<std::size_t>(host_vertices), -1) {
  insert_at(0, sequence);
}

bool LinearOrder::contains(Vertex v) const {
  return v >= 0 && static_cast<std::size_t>(v) < position_.size() && position_[static_cast<std::size_t>(v)] >= 0;
}

int LinearOrder::position(Vertex v) const {
  if (!contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the linear order");
  return position_[static_cast<std::size_t>(v)];
}

std::optional<Vertex> LinearOrder::successor(Vertex v) const {
  const auto p = static_cast<std::size_t>(position(v));
  if (p + 1 == sequence_.size()) return std::nullopt;
  return sequence_[p + 1];
}

std::optional<Vertex> LinearOrder::predecessor(Vertex v) const {
  const int p = position(v);
  if (p == 0) return std::nullopt;
  return sequence_[static_cast<std::size_t>(p - 1)];
}

void LinearOrder::insert_after(Vertex anchor, std::span<const Vertex> block) {
  insert_at(static_cast<std::size_t>(position(anchor)) + 1, block);
}

void LinearOrder::insert_before(Vertex anchor, std::span<const Vertex> block) {
  insert_at(static_cast<std::size_t>(position(anchor)), block);
}

void LinearOrder::insert_at(std::size_t index, std::span<const Vertex> block) {
  for (Vertex v : block) {
    if (v < 0 || static_cast<std::size_t>(v) >= position_.size()) throw InputError("vertex out of range");
    if (position_[static_cast<std::size_t>(v)] >= 0) throw InputError("vertex already in the linear order");
  }
  sequence_.insert(sequence_.begin() + static_cast<std::ptrdiff_t>(index), block.begin(), block.end());
  for (std::size_t p = index; p < sequence_.size(); ++p) {
    position_[static_cast<std::size_t>(sequence_[p])] = static_cast<int>(p);
  }
  if (static_cast<std::size_t>(std::count_if(position_.begin(), position_.end(), [](int p) { return p >= 0; })) !=
      sequence_.size()) {
    throw InputError("duplicate vertex in linear order block");
  }
}

AlphaTable::AlphaTable(int host_vertices, int k)
    : n_(host_vertices), k_(k), values_(static_cast<std::size_t>(host_vertices) * static_cast<std::size_t>(host_vertices), -1) {
  normalize_residue(0, k);
}

std::size_t AlphaTable::index(Vertex earlier, Vertex later) const {
  if (earlier < 0 || later < 0 || earlier >= n_ || later >= n_ || earlier == later) {
    throw InputError("invalid alpha pair");
  }
  return static_cast<std::size_t>(earlier) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(later);
}

void AlphaTable::set(Vertex earlier, Vertex later, int value) {
  int& slot = values_[index(earlier, later)];
  if (slot < 0) ++defined_count_;
  slot = normalize_residue(value, k_);
}

bool AlphaTable::defined(Vertex earlier, Vertex later) const { return values_[index(earlier, later)] >= 0; }

int AlphaTable::at(Vertex earlier, Vertex later) const {
  const int value = values_[index(earlier, later)];
  if (value < 0) {
    throw DefectError("alpha undefined for pair (" + std::to_string(earlier) + "," + std::to_string(later) + ")");
  }
  return value;
}

const char* to_string(EarDirection direction) {
  switch (direction) {
    case EarDirection::forward: return "forward";
    case EarDirection::backward: return "backward";
    case EarDirection::cyclic: return "cyclic";
  }
  return "?";
}

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::forward: return "forward";
    case Branch::cyclic: return "cyclic";
    case Branch::backward: return "backward";
  }
  return "?";
}

EarDirection classify_ear(const LinearOrder& order, const Ear& ear) {
  const int u = order.position(ear.origin());
  const int v = order.position(ear.terminus());
  if (u == v) return EarDirection::cyclic;
  return u < v ? EarDirection::forward : EarDirection::backward;
}

std::vector<int> acyclic_seed_priority(int k, int r) { return descending_residues(k, r - 1, r); }
std::vector<int> forward_priority(int k) { return descending_residues(k, 0, 1); }
std::vector<int> cyclic_priority(int k, int r) { return descending_residues(k, r - 1, r); }
std::vector<int> backward_priority(int k, int alpha) { return descending_residues(k, alpha - 1, alpha); }

Diagnostic assert_ABC(const EarState& state, const LinearOrder& order, const AlphaTable& alpha,
                      const EarSearchLimits& limits) {
  const int k = state.modulus();
  if (static_cast<std::size_t>(order.size()) != state.vertex_count()) {
    return Diagnostic::fail("linear order does not cover D_i exactly");
  }
  for (Vertex v : state.vertices()) {
    if (!order.contains(v)) return Diagnostic::fail("linear order misses a vertex of D_i");
  }
  for (const Arc& a : state.arcs()) {
    if (order.precedes(a.tail, a.head) && state.f(a.tail) == state.f(a.head)) {
      return Diagnostic::fail("(A): forward arc of D_i is monochromatic", std::nullopt, a);
    }
  }
  const auto& seq = order.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!alpha.defined(seq[i], seq[j])) return Diagnostic::fail("(C): alpha undefined for an ordered pair");
    }
  }
  std::optional<Diagnostic> failure;
  for_each_ear(
      state,
      [&](std::span<const Vertex> path) {
        if (failure) return;
        Ear ear{std::vector<Vertex>(path.begin(), path.end())};
        switch (classify_ear(order, ear)) {
          case EarDirection::forward:
            if (residue_of_ear(state, ear) == 1 % k) failure = Diagnostic::fail("(B): forward ear has residue 1", ear);
            break;
          case EarDirection::backward:
            if (ear.length() % k == alpha.at(ear.terminus(), ear.origin())) {
              failure = Diagnostic::fail("(C): backward ear length hits alpha", ear);
            }
            break;
          case EarDirection::cyclic:
            break;
        }
      },
      limits);
  return failure ? *failure : Diagnostic::pass();
}

namespace {

int mod(int value, int k) { return normalize_residue(value, k); }

// Index of each vertex of the ear along its path; a cycle-ear's shared end
// gets index 0.
std::vector<int> path_indices(int n, const Ear& ear) {
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < ear.path.size(); ++j) {
    int& slot = index[static_cast<std::size_t>(ear.path[j])];
    if (slot < 0) slot = static_cast<int>(j);
  }
  return index;
}

class ComponentConstruction {
 public:
  ComponentConstruction(const Digraph& g, int k, int r, const AcyclicColoringOptions& options)
      : g_(g), k_(k), r_(r), options_(options) {}

  ComponentRun run() {
    const ResidueCensus census = residue_census(g_, k_, options_.census);
    ComponentRun result;
    bool seeded = false;
    for (int t : acyclic_seed_priority(k_, r_)) {
      if (census.realized(t)) {
        result.seed_residue = t;
        result.seed = *census.witnesses[static_cast<std::size_t>(t)];
        seeded = true;
        break;
      }
    }
    if (!seeded) {
      throw HypothesisViolated("every cycle has the forbidden residue",
                               census.witnesses[static_cast<std::size_t>(r_)]->vertices);
    }

    const auto& cycle = result.seed.vertices;
    const int length = static_cast<int>(cycle.size());
    std::vector<int> seed_f;
    for (int p = 0; p < length; ++p) seed_f.push_back(p % k_);
    state_.emplace(EarState::seed(g_, k_, result.seed, seed_f));
    order_ = LinearOrder(g_.vertex_count(), cycle);
    alpha_ = AlphaTable(g_.vertex_count(), k_);
    for (int i = 0; i < length; ++i) {
      for (int j = i + 1; j < length; ++j) {
        alpha_.set(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)], i - j + r_);
      }
    }
    observe(nullptr);

    while (!state_->complete()) {
      const std::vector<Ear> ears = enumerate_ears(*state_, options_.ear_limits);
      if (ears.empty()) throw DefectError("strong host has no ear of a proper subdigraph");
      AcyclicStep step = choose(ears);
      if (step.branch == Branch::backward) {
        apply_backward(step);
      } else {
        apply_forward(step);
      }
      result.steps.push_back(step);
      observe(&result.steps.back());
    }
    result.order = order_.sequence();
    return result;
  }

  std::span<const int> colors() const { return state_->f_values(); }

 private:
  void observe(const AcyclicStep* step) {
    if (options_.on_state) options_.on_state(AcyclicStateView{*state_, order_, alpha_, step});
    if (!options_.audit) return;
    Diagnostic diagnostic = assert_ABC(*state_, order_, alpha_, options_.ear_limits);
    if (!diagnostic.ok) throw DefectError("acyclic construction invariant: " + diagnostic.violation);
  }

  AcyclicStep choose(const std::vector<Ear>& ears) {
    const EarState& state = *state_;
    bool have_forward = false;
    bool have_cyclic = false;
    for (const Ear& ear : ears) {
      EarDirection dir = classify_ear(order_, ear);
      have_forward |= dir == EarDirection::forward;
      have_cyclic |= dir == EarDirection::cyclic;
    }
    auto is = [&](EarDirection dir) { return [this, dir](const Ear& ear) { return classify_ear(order_, ear) == dir; }; };
    auto count_class = [&](EarDirection dir, int residue) {
      return std::count_if(ears.begin(), ears.end(), [&](const Ear& ear) {
        return classify_ear(order_, ear) == dir && residue_of_ear(state, ear) == residue;
      });
    };

    AcyclicStep step;
    if (have_forward || have_cyclic) {
      const auto fp = forward_priority(k_);
      const auto cp = cyclic_priority(k_, r_);
      auto choice = first_nonempty_class(ears, state, fp, is(EarDirection::forward));
      step.branch = Branch::forward;
      if (!choice) {
        choice = first_nonempty_class(ears, state, cp, is(EarDirection::cyclic));
        step.branch = Branch::cyclic;
      }
      if (!choice) throw DefectError("forward/cyclic ears exist but every class is excluded");
      step.residue = choice->residue;
      step.ear = std::move(choice->ear);
      if (options_.audit) {
        const int above = (step.residue + 1) % k_;
        if (count_class(EarDirection::forward, above) != 0) {
          throw DefectError("forward class above the chosen class is nonempty");
        }
        if (step.branch == Branch::cyclic && count_class(EarDirection::cyclic, above) != 0) {
          throw DefectError("cyclic class above the chosen class is nonempty");
        }
      }
      return step;
    }

    // Every ear is backward: take the backward pair spanning the fewest
    // vertices of the order, earliest x then earliest y on ties.
    std::optional<std::pair<Vertex, Vertex>> best;
    int best_span = 0;
    for (const Ear& ear : ears) {
      const Vertex x = ear.terminus();
      const Vertex y = ear.origin();
      const int span = order_.position(y) - order_.position(x) + 1;
      const bool better = !best || span < best_span ||
                          (span == best_span && (order_.position(x) < order_.position(best->first) ||
                                                 (x == best->first && order_.position(y) < order_.position(best->second))));
      if (better) {
        best = {x, y};
        best_span = span;
      }
    }
    const auto [x, y] = *best;
    const int alpha = alpha_.at(x, y);
    auto between = [x = x, y = y](const Ear& ear) { return ear.origin() == y && ear.terminus() == x; };
    auto by_length = [](const Ear& ear) { return ear.length(); };
    for (const Ear& ear : ears) {
      if (between(ear) && ear.length() % k_ == alpha) throw DefectError("backward ear length equals alpha(x,y)");
    }
    auto choice = first_nonempty_class(ears, state, backward_priority(k_, alpha), between, by_length);
    if (!choice) throw DefectError("backward pair without an admissible ear");
    step.branch = Branch::backward;
    step.residue = choice->residue;
    step.ear = std::move(choice->ear);
    step.backward_pair = std::make_pair(x, y);
    step.pair_alpha = alpha;
    if (options_.audit) {
      const int above = (step.residue + 1) % k_;
      for (const Ear& ear : ears) {
        if (between(ear) && ear.length() % k_ == above) throw DefectError("backward class above the chosen class is nonempty");
      }
    }
    return step;
  }

  void apply_forward(const AcyclicStep& step) {
    const Ear& ear = step.ear;
    const int h = ear.length();
    const Vertex u0 = ear.origin();
    const Vertex uh = ear.terminus();
    const EarState& before = *state_;
    const int f0 = before.f(u0);
    std::vector<int> interior_f;
    for (int j = 1; j < h; ++j) interior_f.push_back(mod(f0 + j, k_));
    EarState next = extend(before, ear, interior_f);
    order_.insert_after(u0, ear.internal());
    const auto on_path = path_indices(g_.vertex_count(), ear);
    auto is_new = [&](Vertex v) { return !before.contains(v); };
    auto index = [&](Vertex v) { return on_path[static_cast<std::size_t>(v)]; };
    const auto& seq = order_.sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        const Vertex a = seq[i];
        const Vertex b = seq[j];
        if (!is_new(a) && !is_new(b)) continue;
        int value;
        if (index(a) >= 0 && index(b) >= 0) {
          const int segment = index(b) - index(a);
          if (segment <= 0) throw DefectError("forward insertion broke path order");
          value = r_ - segment;
        } else if (is_new(a)) {
          if (order_.precedes(uh, b)) {
            value = alpha_.at(uh, b) - (h - index(a));
          } else {
            value = next.f(a) - next.f(b) + 1;
          }
        } else {
          if (!order_.precedes(a, u0)) throw DefectError("old vertex between u0 and the inserted block");
          value = alpha_.at(a, u0) - next.f(b) + f0;
        }
        alpha_.set(a, b, value);
      }
    }
    state_.emplace(std::move(next));
  }

  void apply_backward(const AcyclicStep& step) {
    // The ear runs y = u_h -> u_{h-1} -> ... -> u_0 = x.
    const Ear& ear = step.ear;
    const int h = ear.length();
    const Vertex y = ear.origin();
    const Vertex x = ear.terminus();
    const int alpha_xy = *step.pair_alpha;
    const EarState& before = *state_;
    const int fx = before.f(x);
    std::vector<int> interior_f;
    for (int i = 1; i < h; ++i) interior_f.push_back(mod(fx - (h - i), k_));
    EarState next = extend(before, ear, interior_f);
    order_.insert_before(x, ear.internal());
    const auto on_path = path_indices(g_.vertex_count(), ear);
    auto is_new = [&](Vertex v) { return !before.contains(v); };
    auto on = [&](Vertex v) { return on_path[static_cast<std::size_t>(v)] >= 0; };
    const auto& seq = order_.sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        const Vertex a = seq[i];
        const Vertex b = seq[j];
        if (!is_new(a) && !is_new(b)) continue;
        int value;
        if (is_new(a) && b == y) {
          value = alpha_xy - fx + next.f(a);
        } else if (on(a) && on(b)) {
          value = next.f(a) - next.f(b) + r_;
        } else if (is_new(a)) {
          if (!order_.precedes(x, b)) throw DefectError("old vertex inside the inserted backward block");
          value = alpha_.at(x, b) - fx + next.f(a);
        } else {
          value = alpha_.at(a, y) - h + fx - next.f(b);
        }
        alpha_.set(a, b, value);
      }
    }
    state_.emplace(std::move(next));
  }

  const Digraph& g_;
  int k_;
  int r_;
  const AcyclicColoringOptions& options_;
  std::optional<EarState> state_;
  LinearOrder order_;
  AlphaTable alpha_;
};

}  // namespace

AcyclicColoringRun acyclic_color(const Digraph& d, int k, int r, const AcyclicColoringOptions& options) {
  AcyclicColoringRun run;
  run.modulus = k;
  run.residue = normalize_residue(r, k);
  if (options.check_hypothesis) {
    HypothesisVerdict verdict = hypothesis_holds(d, k, run.residue, options.census);
    if (!verdict.holds) {
      throw HypothesisViolated("digraph has a cycle of length " + std::to_string(run.residue) + " mod " +
                                   std::to_string(k),
                               verdict.witness->vertices);
    }
  }

  run.result.kind = ColoringKind::acyclic;
  run.result.colors.assign(static_cast<std::size_t>(d.vertex_count()), 0);
  for (const auto& component : strong_components(d)) {
    if (component.size() == 1) {
      run.order.push_back(component.front());
      continue;
    }
    auto sub = induced_subdigraph(d, component);
    ComponentConstruction construction(sub.graph, k, run.residue, options);
    ComponentRun local = construction.run();
    auto lift = [&](Vertex v) { return sub.to_host[static_cast<std::size_t>(v)]; };
    auto lift_all = [&](std::vector<Vertex>& vs) {
      for (Vertex& v : vs) v = lift(v);
    };
    local.vertices = component;
    lift_all(local.seed.vertices);
    local.seed = VertexCycle::canonical(std::move(local.seed.vertices));
    lift_all(local.order);
    for (auto& step : local.steps) {
      lift_all(step.ear.path);
      if (step.backward_pair) step.backward_pair = std::make_pair(lift(step.backward_pair->first), lift(step.backward_pair->second));
    }
    const auto colors = construction.colors();
    for (std::size_t i = 0; i < colors.size(); ++i) run.result.colors[static_cast<std::size_t>(lift(static_cast<Vertex>(i)))] = colors[i];
    run.order.insert(run.order.end(), local.order.begin(), local.order.end());
    run.components.push_back(std::move(local));
  }

  ColoringVerdict verdict = verify_coloring(d, run.result);
  if (!verdict.valid) throw DefectError("ear construction produced a cyclic color class: " + verdict.reason);
  return run;
}

}  // namespace earcolor
