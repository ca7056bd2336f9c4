#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "earcolor/digraph.hpp"

namespace earcolor {

enum class ColoringKind { proper, acyclic };

std::string to_string(ColoringKind kind);

struct Coloring {
  std::vector<int> colors;  // vertex -> color
  ColoringKind kind = ColoringKind::proper;
  bool verified = false;  // set only by verify_coloring

  int distinct_colors() const;
};

// Independent check of a coloring; the verdict never depends on how the
// coloring was produced.
struct ColoringVerdict {
  bool valid = false;
  int colors_used = 0;
  std::string reason;                        // empty when valid
  std::optional<Arc> monochromatic_arc;      // proper: offending arc
  std::optional<VertexCycle> monochromatic_cycle;  // acyclic: offending cycle
};

ColoringVerdict verify_proper(const Digraph& d, std::span<const int> colors);
ColoringVerdict verify_proper(const UndirectedGraph& g, std::span<const int> colors);
ColoringVerdict verify_acyclic(const Digraph& d, std::span<const int> colors);

// Runs the checker matching `c.kind` and records the verdict in `c.verified`.
ColoringVerdict verify_coloring(const Digraph& d, Coloring& c);

// Relabels colors to 0..m-1 in order of first appearance.
std::vector<int> compact_colors(std::span<const int> colors);

}  // namespace earcolor
