#include "sleepcomb/graph.hpp"

#include <algorithm>
#include <sstream>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

void Graph::add_edge(int u, int v, const Label& label) {
  if (u < 0 || v < 0) throw FormatError("negative vertex id");
  edges.push_back(Edge{u, v, label});
  num_vertices = std::max(num_vertices, std::max(u, v) + 1);
}

std::string Graph::to_text() const {
  std::ostringstream os;
  os << (directed ? "directed" : "undirected") << '\n';
  if (source) os << "s " << *source << '\n';
  if (sink) os << "t " << *sink << '\n';
  for (const Edge& e : edges) os << "edge " << e.u << ' ' << e.v << ' ' << e.label.str() << '\n';
  return os.str();
}

Graph Graph::from_text(const std::string& text) {
  Graph g;
  std::istringstream is(text);
  std::string line;
  bool saw_header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (!saw_header) {
      if (word == "directed")
        g.directed = true;
      else if (word == "undirected")
        g.directed = false;
      else
        throw FormatError("graph line " + std::to_string(lineno) + ": expected directed|undirected");
      saw_header = true;
      continue;
    }
    if (word == "s" || word == "t") {
      int id;
      if (!(ls >> id) || id < 0) throw FormatError("graph line " + std::to_string(lineno) + ": bad vertex id");
      (word == "s" ? g.source : g.sink) = id;
      g.num_vertices = std::max(g.num_vertices, id + 1);
    } else if (word == "edge") {
      int u, v;
      std::string label;
      if (!(ls >> u >> v >> label))
        throw FormatError("graph line " + std::to_string(lineno) + ": bad edge record");
      g.add_edge(u, v, Label::parse(label));
    } else {
      throw FormatError("graph line " + std::to_string(lineno) + ": unknown record '" + word + "'");
    }
  }
  if (!saw_header) throw FormatError("empty graph file");
  return g;
}

}  // namespace sleepcomb
