#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

namespace {

struct Arc {
  int to;
  int edge;  // index into g.edges
};

// Traversable arcs per vertex; undirected edges are usable both ways.
std::vector<std::vector<Arc>> out_arcs(const Graph& g) {
  std::vector<std::vector<Arc>> adj(g.num_vertices);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const Edge& e = g.edges[i];
    adj[e.u].push_back({e.v, i});
    if (!g.directed) adj[e.v].push_back({e.u, i});
  }
  return adj;
}

void dfs_paths(const Graph& g, const std::vector<std::vector<Arc>>& adj,
               const SleepingSet& sleeping, int cur, int target, std::vector<char>& visited,
               std::vector<Label>& labels, std::size_t limit, std::vector<Action>& out,
               bool& truncated) {
  if (truncated) return;
  if (cur == target) {
    if (out.size() >= limit) {
      truncated = true;
      return;
    }
    out.push_back(Action(labels));
    return;
  }
  for (const Arc& a : adj[cur]) {
    if (visited[a.to]) continue;
    const Label& lab = g.edges[a.edge].label;
    if (sleeping.contains(lab)) continue;
    visited[a.to] = 1;
    labels.push_back(lab);
    dfs_paths(g, adj, sleeping, a.to, target, visited, labels, limit, out, truncated);
    labels.pop_back();
    visited[a.to] = 0;
    if (truncated) return;
  }
}

}  // namespace

ShortestPathInstance::ShortestPathInstance(Graph g) : g_(std::move(g)) {
  if (!g_.source || !g_.sink) throw FormatError("shortest path instance needs source and sink");
  if (*g_.source == *g_.sink) throw FormatError("source and sink must differ");
  std::vector<Label> ground;
  ground.reserve(g_.edges.size());
  for (const Edge& e : g_.edges) ground.push_back(e.label);
  set_ground(std::move(ground));
  if (!has_awake(SleepingSet{})) throw FormatError("no s-t path exists; decision set empty");
}

bool ShortestPathInstance::contains(const Action& v) const {
  if (v.empty()) return false;
  // Walk from s consuming the unique available next edge; a simple s-t path
  // consumes every edge exactly once without revisiting a vertex.
  std::map<Label, const Edge*> by_label;
  for (const Edge& e : g_.edges)
    if (v.contains(e.label)) by_label[e.label] = &e;
  if (by_label.size() != v.size()) return false;  // some label is not an edge

  std::set<const Edge*> unused;
  for (auto& [lab, e] : by_label) unused.insert(e);
  std::vector<char> visited(g_.num_vertices, 0);
  int cur = *g_.source;
  visited[cur] = 1;
  while (true) {
    if (cur == *g_.sink) return unused.empty();
    const Edge* next = nullptr;
    for (const Edge* e : unused) {
      bool leaves = (e->u == cur) || (!g_.directed && e->v == cur);
      if (!leaves) continue;
      if (next != nullptr) return false;  // branching: not a path
      next = e;
    }
    if (next == nullptr) return false;  // dead end before reaching t
    cur = (next->u == cur) ? next->v : next->u;
    if (visited[cur]) return false;  // revisit: not simple
    visited[cur] = 1;
    unused.erase(next);
  }
}

bool ShortestPathInstance::emit_awake(const SleepingSet& sleeping, std::size_t limit,
                                      std::vector<Action>& out) const {
  auto adj = out_arcs(g_);
  std::vector<char> visited(g_.num_vertices, 0);
  std::vector<Label> labels;
  bool truncated = false;
  visited[*g_.source] = 1;
  dfs_paths(g_, adj, sleeping, *g_.source, *g_.sink, visited, labels, limit, out, truncated);
  return truncated;
}

std::optional<MinLossResult> ShortestPathInstance::min_loss_awake(const SleepingSet& sleeping,
                                                                  const LossFunction& losses) const {
  const int nv = g_.num_vertices;
  const int s = *g_.source;
  const int t = *g_.sink;

  std::vector<int> awake_edges;
  for (int i = 0; i < static_cast<int>(g_.edges.size()); ++i)
    if (!sleeping.contains(g_.edges[i].label)) awake_edges.push_back(i);

  // Acyclicity of the awake subgraph decides the solver. Undirected graphs
  // are treated as cyclic (every edge is a 2-cycle).
  bool is_dag = g_.directed;
  std::vector<int> topo;
  if (g_.directed) {
    std::vector<int> indeg(nv, 0);
    for (int i : awake_edges) ++indeg[g_.edges[i].v];
    std::vector<int> queue_;
    for (int u = 0; u < nv; ++u)
      if (indeg[u] == 0) queue_.push_back(u);
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      int u = queue_[h];
      topo.push_back(u);
      for (int i : awake_edges)
        if (g_.edges[i].u == u && --indeg[g_.edges[i].v] == 0) queue_.push_back(g_.edges[i].v);
    }
    is_dag = static_cast<int>(topo.size()) == nv;
  }

  if (is_dag) {
    // Topological relaxation; handles negative losses, ties broken toward
    // the label-lexicographically smaller edge set.
    struct Best {
      double cost = 0.0;
      std::vector<Label> labels;
      bool set = false;
    };
    std::vector<Best> best(nv);
    best[s].set = true;
    std::vector<std::vector<int>> out_by_tail(nv);
    for (int i : awake_edges) out_by_tail[g_.edges[i].u].push_back(i);
    for (int u : topo) {
      if (!best[u].set) continue;
      for (int i : out_by_tail[u]) {
        const Edge& e = g_.edges[i];
        const double cand_cost = best[u].cost + losses.at(e.label);
        std::vector<Label> cand = best[u].labels;
        cand.insert(std::upper_bound(cand.begin(), cand.end(), e.label), e.label);
        Best& b = best[e.v];
        if (!b.set || cand_cost < b.cost || (cand_cost == b.cost && cand < b.labels)) {
          b.set = true;
          b.cost = cand_cost;
          b.labels = std::move(cand);
        }
      }
    }
    if (!best[t].set) return std::nullopt;
    Action act{std::vector<Label>(best[t].labels)};
    double value = 0.0;
    for (const Label& l : act) value += losses.at(l);
    return MinLossResult{act, value};
  }

  // Cyclic (or undirected) graph: Dijkstra, nonnegative losses required.
  for (int i : awake_edges)
    if (losses.at(g_.edges[i].label) < 0.0)
      throw UnsupportedLossRange("negative losses on a cyclic shortest-path instance");

  auto adj = out_arcs(g_);
  std::vector<double> dist(nv, 0.0);
  std::vector<char> done(nv, 0), seen(nv, 0);
  std::vector<int> parent_edge(nv, -1), parent(nv, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[s] = 0.0;
  seen[s] = 1;
  heap.push({0.0, s});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const Arc& a : adj[u]) {
      const Label& lab = g_.edges[a.edge].label;
      if (sleeping.contains(lab)) continue;
      const double nd = d + losses.at(lab);
      if (!seen[a.to] || nd < dist[a.to]) {
        seen[a.to] = 1;
        dist[a.to] = nd;
        parent_edge[a.to] = a.edge;
        parent[a.to] = u;
        heap.push({nd, a.to});
      }
    }
  }
  if (!done[t]) return std::nullopt;
  std::vector<Label> labels;
  for (int cur = t; cur != s; cur = parent[cur]) labels.push_back(g_.edges[parent_edge[cur]].label);
  Action act{std::move(labels)};
  double value = 0.0;
  for (const Label& l : act) value += losses.at(l);
  return MinLossResult{act, value};
}

}  // namespace sleepcomb
