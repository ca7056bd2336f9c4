#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "earcolor/digraph.hpp"

namespace earcolor::cli {

enum class GraphMode { directed, undirected };

// Text graph format:
//   # comment
//   mode directed|undirected   (optional, before the header)
//   n m
//   u v                        (m lines, 0-based)
struct GraphFile {
  GraphMode mode = GraphMode::directed;
  int vertices = 0;
  std::vector<std::pair<int, int>> pairs;

  Digraph digraph() const;
  UndirectedGraph undirected() const;
  // Bidirected graph for undirected files, the digraph itself otherwise.
  Digraph as_digraph() const;
};

// Throws InputError with the offending line number.
GraphFile parse_graph_file(std::istream& in);
GraphFile parse_graph_text(const std::string& text);

// Canonical text: mode line, header, pairs in input order.
std::string serialize_graph_file(const GraphFile& file);

// Lines "vertex color"; every vertex in 0..n-1 exactly once.
std::vector<int> parse_coloring_file(std::istream& in, int vertices);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace earcolor::cli
