#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sleepcomb/label.hpp"

namespace sleepcomb {

struct Edge {
  int u = 0;
  int v = 0;
  Label label;
};

/// A small multigraph with labeled edges. Vertex ids are dense 0-based ints;
/// parallel edges are allowed and distinguished by their labels.
struct Graph {
  bool directed = true;
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::optional<int> source;
  std::optional<int> sink;

  void add_edge(int u, int v, const Label& label);

  /// Text form, one record per line:
  ///   directed|undirected
  ///   s <id>        (optional)
  ///   t <id>        (optional)
  ///   edge <u> <v> <label>
  std::string to_text() const;
  static Graph from_text(const std::string& text);  // throws FormatError
};

}  // namespace sleepcomb
