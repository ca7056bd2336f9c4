#include "earcolor/ears.hpp"

#include <algorithm>
#include <string>

#include "earcolor/cycles.hpp"
#include "earcolor/error.hpp"

namespace earcolor {

namespace {

std::size_t arc_index(const Digraph& d, Vertex tail, Vertex head) {
  return static_cast<std::size_t>(tail) * static_cast<std::size_t>(d.vertex_count()) +
         static_cast<std::size_t>(head);
}

}  // namespace

EarState EarState::seed(const Digraph& host, int k, const VertexCycle& cycle, std::span<const int> f_values) {
  normalize_residue(0, k);
  if (!is_cycle_in(host, cycle.vertices)) throw InputError("seed is not a cycle of the host");
  if (f_values.size() != cycle.vertices.size()) throw InputError("seed f arity mismatch");
  const auto n = static_cast<std::size_t>(host.vertex_count());
  EarState state;
  state.host_ = &host;
  state.k_ = k;
  state.in_.assign(n, 0);
  state.f_.assign(n, -1);
  state.arc_in_.assign(n * n, 0);
  const auto& vs = cycle.vertices;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (f_values[j] < 0 || f_values[j] >= k) throw InputError("f value out of range");
    state.in_[static_cast<std::size_t>(vs[j])] = 1;
    state.f_[static_cast<std::size_t>(vs[j])] = f_values[j];
    state.arc_in_[arc_index(host, vs[j], vs[(j + 1) % vs.size()])] = 1;
  }
  state.vertices_in_ = vs.size();
  state.arcs_in_ = vs.size();
  state.seed_ = cycle;
  return state;
}

bool EarState::contains_arc(Vertex tail, Vertex head) const {
  return arc_in_[arc_index(*host_, tail, head)] != 0;
}

int EarState::f(Vertex v) const {
  if (v < 0 || v >= host_->vertex_count() || !contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " is not in the current subdigraph");
  }
  return f_[static_cast<std::size_t>(v)];
}

std::vector<Vertex> EarState::vertices() const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < host_->vertex_count(); ++v) {
    if (contains(v)) result.push_back(v);
  }
  return result;
}

std::vector<Arc> EarState::arcs() const {
  std::vector<Arc> result;
  for (const Arc& a : host_->arcs()) {
    if (contains_arc(a.tail, a.head)) result.push_back(a);
  }
  return result;
}

bool EarState::complete() const {
  return vertices_in_ == static_cast<std::size_t>(host_->vertex_count()) && arcs_in_ == host_->arc_count();
}

InducedSubdigraph EarState::as_digraph() const {
  InducedSubdigraph result;
  result.to_host = vertices();
  result.from_host.assign(static_cast<std::size_t>(host_->vertex_count()), -1);
  for (std::size_t i = 0; i < result.to_host.size(); ++i) {
    result.from_host[static_cast<std::size_t>(result.to_host[i])] = static_cast<Vertex>(i);
  }
  std::vector<Arc> local;
  for (const Arc& a : arcs()) {
    local.push_back({result.from_host[static_cast<std::size_t>(a.tail)],
                     result.from_host[static_cast<std::size_t>(a.head)]});
  }
  result.graph = Digraph(static_cast<int>(result.to_host.size()), local);
  return result;
}

EarState EarState::with_f(Vertex v, int value) const {
  f(v);
  EarState copy = *this;
  copy.f_[static_cast<std::size_t>(v)] = normalize_residue(value, k_);
  return copy;
}

int residue_of_ear(const EarState& state, const Ear& ear) {
  const int k = state.modulus();
  return normalize_residue(ear.length() - (state.f(ear.terminus()) - state.f(ear.origin())), k);
}

namespace {

class EarSearch {
 public:
  EarSearch(const EarState& state, const std::function<void(std::span<const Vertex>)>& visit,
            const EarSearchLimits& limits)
      : state_(state),
        host_(state.host()),
        visit_(visit),
        limits_(limits),
        on_path_(static_cast<std::size_t>(host_.vertex_count()), 0) {}

  void run() {
    for (Vertex u = 0; u < host_.vertex_count(); ++u) {
      if (!state_.contains(u)) continue;
      path_.assign(1, u);
      for (Vertex w : host_.out_neighbors(u)) {
        if (state_.contains(w)) {
          if (!state_.contains_arc(u, w)) emit(w);
        } else {
          descend(w);
        }
      }
    }
  }

 private:
  void count_path() {
    if (++paths_ > limits_.max_paths) {
      throw ResourceLimitExceeded("ear search exceeded " + std::to_string(limits_.max_paths) + " paths");
    }
  }

  void emit(Vertex end) {
    count_path();
    path_.push_back(end);
    visit_(path_);
    path_.pop_back();
  }

  // Extends the current path into the outside vertex x.
  void descend(Vertex x) {
    count_path();
    path_.push_back(x);
    on_path_[static_cast<std::size_t>(x)] = 1;
    for (Vertex y : host_.out_neighbors(x)) {
      if (state_.contains(y)) {
        emit(y);
      } else if (!on_path_[static_cast<std::size_t>(y)]) {
        descend(y);
      }
    }
    on_path_[static_cast<std::size_t>(x)] = 0;
    path_.pop_back();
  }

  const EarState& state_;
  const Digraph& host_;
  const std::function<void(std::span<const Vertex>)>& visit_;
  const EarSearchLimits& limits_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  std::size_t paths_ = 0;
};

}  // namespace

void for_each_ear(const EarState& state, const std::function<void(std::span<const Vertex>)>& visit,
                  const EarSearchLimits& limits) {
  EarSearch(state, visit, limits).run();
}

std::vector<Ear> enumerate_ears(const EarState& state, const EarSearchLimits& limits) {
  std::vector<Ear> ears;
  for_each_ear(
      state, [&](std::span<const Vertex> path) { ears.push_back(Ear{std::vector<Vertex>(path.begin(), path.end())}); },
      limits);
  return ears;
}

std::optional<ClassChoice> first_nonempty_class(std::span<const Ear> ears, const EarState& state,
                                                std::span<const int> priority, const EarFilter& filter,
                                                const EarResidue& residue) {
  const int k = state.modulus();
  std::vector<const Ear*> least(static_cast<std::size_t>(k), nullptr);
  for (const Ear& ear : ears) {
    if (filter && !filter(ear)) continue;
    const int j = residue ? normalize_residue(residue(ear), k) : residue_of_ear(state, ear);
    auto& slot = least[static_cast<std::size_t>(j)];
    if (!slot || ear < *slot) slot = &ear;
  }
  for (int j : priority) {
    if (const Ear* ear = least[static_cast<std::size_t>(normalize_residue(j, k))]) {
      return ClassChoice{normalize_residue(j, k), *ear};
    }
  }
  return std::nullopt;
}

EarState extend(const EarState& state, const Ear& ear, std::span<const int> f_values) {
  const Digraph& host = state.host();
  const auto& p = ear.path;
  if (p.size() < 2) throw InputError("ear must have at least one arc");
  if (!state.contains(ear.origin()) || !state.contains(ear.terminus())) {
    throw InputError("ear endpoints must lie in the current subdigraph");
  }
  if (ear.is_cycle_ear() && p.size() < 3) throw InputError("cycle-ear must have length at least 2");
  auto interior = ear.internal();
  if (f_values.size() != interior.size()) throw InputError("f arity does not match ear interior");
  std::vector<char> seen(static_cast<std::size_t>(host.vertex_count()), 0);
  for (Vertex x : interior) {
    if (x < 0 || x >= host.vertex_count() || state.contains(x) || seen[static_cast<std::size_t>(x)]) {
      throw InputError("ear interior must be distinct vertices outside the current subdigraph");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (!host.has_arc(p[j], p[j + 1])) throw InputError("ear uses an arc absent from the host");
  }
  if (p.size() == 2 && state.contains_arc(p[0], p[1])) throw InputError("ear arc already in subdigraph");

  EarState next = state;
  for (std::size_t j = 0; j < interior.size(); ++j) {
    if (f_values[j] < 0 || f_values[j] >= state.modulus()) throw InputError("f value out of range");
    next.in_[static_cast<std::size_t>(interior[j])] = 1;
    next.f_[static_cast<std::size_t>(interior[j])] = f_values[j];
  }
  for (std::size_t j = 0; j + 1 < p.size(); ++j) next.arc_in_[arc_index(host, p[j], p[j + 1])] = 1;
  next.vertices_in_ += interior.size();
  next.arcs_in_ += p.size() - 1;
  next.log_.push_back(ear);
  if (!strongly_connected(next.as_digraph().graph)) {
    throw DefectError("subdigraph lost strong connectivity after adding an ear");
  }
  return next;
}

std::vector<int> descending_residues(int k, int start, int skip) {
  std::vector<int> order;
  skip = normalize_residue(skip, k);
  for (int j = normalize_residue(start, k); j != skip && static_cast<int>(order.size()) < k;
       j = normalize_residue(j - 1, k)) {
    order.push_back(j);
  }
  return order;
}

}  // namespace earcolor
