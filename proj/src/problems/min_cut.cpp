#include <algorithm>
#include <queue>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

namespace {

constexpr std::size_t kMaxAwakeEdges = 22;  // 2^22 subsets at most

// Plain Dinic max-flow over an explicit arc list.
struct FlowNet {
  struct Arc {
    int to;
    double cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs;
  explicit FlowNet(int n) : arcs(n) {}

  void add(int u, int v, double cap) {
    arcs[u].push_back({v, cap, static_cast<int>(arcs[v].size())});
    arcs[v].push_back({u, 0.0, static_cast<int>(arcs[u].size()) - 1});
  }

  std::vector<int> level;
  std::vector<std::size_t> iter;

  bool bfs(int s, int t) {
    level.assign(arcs.size(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : arcs[u]) {
        if (a.cap > 0.0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  double dfs(int u, int t, double pushed) {
    if (u == t) return pushed;
    for (std::size_t& i = iter[u]; i < arcs[u].size(); ++i) {
      Arc& a = arcs[u][i];
      if (a.cap > 0.0 && level[a.to] == level[u] + 1) {
        const double got = dfs(a.to, t, std::min(pushed, a.cap));
        if (got > 0.0) {
          a.cap -= got;
          arcs[a.to][a.rev].cap += got;
          return got;
        }
      }
    }
    return 0.0;
  }

  double max_flow(int s, int t) {
    double flow = 0.0;
    while (bfs(s, t)) {
      iter.assign(arcs.size(), 0);
      while (true) {
        const double got = dfs(s, t, 1e30);
        if (got <= 0.0) break;
        flow += got;
      }
    }
    return flow;
  }

  std::vector<char> source_side(int s) const {
    std::vector<char> seen(arcs.size(), 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : arcs[u]) {
        if (a.cap > 0.0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push(a.to);
        }
      }
    }
    return seen;
  }
};

}  // namespace

MinCutInstance::MinCutInstance(Graph g) : g_(std::move(g)) {
  if (!g_.source || !g_.sink) throw FormatError("min cut instance needs source and sink");
  if (*g_.source == *g_.sink) throw FormatError("source and sink must differ");
  std::vector<Label> ground;
  for (const Edge& e : g_.edges) ground.push_back(e.label);
  set_ground(std::move(ground));
}

bool MinCutInstance::disconnects(const Action& removed) const {
  std::vector<std::vector<int>> adj(g_.num_vertices);
  for (const Edge& e : g_.edges) {
    if (removed.contains(e.label)) continue;
    adj[e.u].push_back(e.v);
    if (!g_.directed) adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(g_.num_vertices, 0);
  std::queue<int> q;
  seen[*g_.source] = 1;
  q.push(*g_.source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        q.push(v);
      }
    }
  }
  return !seen[*g_.sink];
}

bool MinCutInstance::contains(const Action& v) const { return disconnects(v); }

bool MinCutInstance::emit_awake(const SleepingSet& sleeping, std::size_t limit,
                                std::vector<Action>& out) const {
  std::vector<Label> awake;
  for (const Label& l : ground())
    if (!sleeping.contains(l)) awake.push_back(l);
  if (awake.size() > kMaxAwakeEdges) return true;  // refuse; report truncation
  const std::size_t n = awake.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Label> labels;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) labels.push_back(awake[b]);
    Action cand{std::move(labels)};
    if (!disconnects(cand)) continue;
    if (out.size() >= limit) return true;
    out.push_back(std::move(cand));
  }
  return false;
}

std::optional<MinLossResult> MinCutInstance::min_loss_awake(const SleepingSet& sleeping,
                                                            const LossFunction& losses) const {
  // Awake edges carry their loss as capacity; sleeping edges get a capacity
  // larger than any awake cut so they can never cross the minimum cut while
  // an awake cut exists.
  double awake_total = 0.0;
  for (const Label& l : ground()) {
    if (sleeping.contains(l)) continue;
    const double value = losses.at(l);
    if (value < 0.0) throw UnsupportedLossRange("min cut requires nonnegative losses");
    awake_total += value;
  }
  const double big = awake_total + 1.0;

  FlowNet net(g_.num_vertices);
  for (const Edge& e : g_.edges) {
    const double cap = sleeping.contains(e.label) ? big : losses.at(e.label);
    net.add(e.u, e.v, cap);
    if (!g_.directed) net.add(e.v, e.u, cap);
  }
  const double flow = net.max_flow(*g_.source, *g_.sink);
  if (flow >= big - 0.5) return std::nullopt;  // every disconnecting set needs a sleeping edge

  const std::vector<char> side = net.source_side(*g_.source);
  std::vector<Label> cut;
  for (const Edge& e : g_.edges) {
    const bool crosses = g_.directed ? (side[e.u] && !side[e.v]) : (side[e.u] != side[e.v]);
    if (crosses) cut.push_back(e.label);
  }
  Action act{std::move(cut)};
  for (const Label& l : act)
    if (sleeping.contains(l)) return std::nullopt;
  double value = 0.0;
  for (const Label& l : act) value += losses.at(l);
  return MinLossResult{act, value};
}

}  // namespace sleepcomb
