#include "graph_file.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

#include "earcolor/error.hpp"

namespace earcolor::cli {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

[[noreturn]] void fail(int line_no, const std::string& message) {
  throw InputError("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

Digraph GraphFile::digraph() const {
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (auto [u, v] : pairs) arcs.push_back({u, v});
  return Digraph(vertices, arcs);
}

UndirectedGraph GraphFile::undirected() const {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return UndirectedGraph(vertices, edges);
}

Digraph GraphFile::as_digraph() const { return mode == GraphMode::directed ? digraph() : bidirect(undirected()); }

GraphFile parse_graph_file(std::istream& in) {
  GraphFile file;
  bool header = false;
  int expected = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto parts = tokens(line);
    if (parts.empty() || parts.front().front() == '#') continue;
    if (!header && parts.front() == "mode") {
      if (parts.size() != 2) fail(line_no, "mode line takes one argument");
      if (parts[1] == "directed") file.mode = GraphMode::directed;
      else if (parts[1] == "undirected") file.mode = GraphMode::undirected;
      else fail(line_no, "unknown mode '" + std::string(parts[1]) + "'");
      continue;
    }
    if (parts.size() != 2) fail(line_no, "expected two integers");
    const int a = parse_int(parts[0], line_no);
    const int b = parse_int(parts[1], line_no);
    if (!header) {
      if (a < 0 || b < 0) fail(line_no, "negative count in header");
      file.vertices = a;
      expected = b;
      header = true;
      continue;
    }
    if (static_cast<int>(file.pairs.size()) == expected) fail(line_no, "more pairs than the header declares");
    if (a < 0 || a >= file.vertices || b < 0 || b >= file.vertices) fail(line_no, "vertex out of range");
    if (a == b) fail(line_no, "loop");
    file.pairs.emplace_back(a, b);
  }
  if (!header) throw InputError("missing header line 'n m'");
  if (static_cast<int>(file.pairs.size()) != expected) {
    throw InputError("header declares " + std::to_string(expected) + " pairs, found " +
                     std::to_string(file.pairs.size()));
  }
  // Duplicate detection lives in the graph constructors.
  if (file.mode == GraphMode::directed) (void)file.digraph();
  else (void)file.undirected();
  return file;
}

GraphFile parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_file(in);
}

std::string serialize_graph_file(const GraphFile& file) {
  std::ostringstream out;
  out << "mode " << (file.mode == GraphMode::directed ? "directed" : "undirected") << '\n';
  out << file.vertices << ' ' << file.pairs.size() << '\n';
  for (auto [u, v] : file.pairs) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> parse_coloring_file(std::istream& in, int vertices) {
  std::vector<int> colors(static_cast<std::size_t>(vertices), -1);
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto parts = tokens(line);
    if (parts.empty() || parts.front().front() == '#') continue;
    if (parts.size() != 2) fail(line_no, "expected 'vertex color'");
    const int v = parse_int(parts[0], line_no);
    const int c = parse_int(parts[1], line_no);
    if (v < 0 || v >= vertices) fail(line_no, "vertex out of range");
    if (c < 0) fail(line_no, "negative color");
    if (colors[static_cast<std::size_t>(v)] != -1) fail(line_no, "vertex colored twice");
    colors[static_cast<std::size_t>(v)] = c;
  }
  for (int v = 0; v < vertices; ++v) {
    if (colors[static_cast<std::size_t>(v)] == -1) throw InputError("vertex " + std::to_string(v) + " has no color");
  }
  return colors;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace earcolor::cli
