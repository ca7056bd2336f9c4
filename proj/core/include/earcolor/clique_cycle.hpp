#pragma once

#include <span>
#include <vector>

#include "earcolor/digraph.hpp"

namespace earcolor {

struct CliqueCycleCertificate {
  VertexCycle cycle;
  std::vector<Vertex> covered;                  // U, sorted
  std::vector<std::vector<Vertex>> components;  // U_1..U_t, condensation order
  VertexPath connector;                         // shortest path from U_t to U_1; empty when t = 1
  std::vector<VertexPath> detours;              // P_i, origin x_i and terminus y_i
  VertexCycle hamiltonian_core;                 // cycle through U using detour shortcuts
};

// Cycle of d through every vertex of the pairwise adjacent set `u_set`.
// Throws InputError when d is not strong or u_set is not pairwise adjacent.
CliqueCycleCertificate cycle_through_clique(const Digraph& d, std::span<const Vertex> u_set);

// Hamiltonian cycle of a strong semicomplete digraph on at least 2 vertices.
VertexCycle hamiltonian_semicomplete(const Digraph& h);

}  // namespace earcolor
