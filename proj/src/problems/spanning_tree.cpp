#include <algorithm>

#include "algo_util.hpp"
#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

namespace {
// Rough guard on the number of edge combinations the enumerator will visit.
constexpr long long kCombinationBudget = 20000000;

long long binomial_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}
}  // namespace

SpanningTreeInstance::SpanningTreeInstance(Graph g) : g_(std::move(g)) {
  if (g_.directed) throw FormatError("spanning tree instance needs an undirected graph");
  if (g_.num_vertices < 1) throw FormatError("empty graph");
  std::vector<Label> ground;
  for (const Edge& e : g_.edges) ground.push_back(e.label);
  set_ground(std::move(ground));
  detail::UnionFind uf(g_.num_vertices);
  int merges = 0;
  for (const Edge& e : g_.edges) merges += uf.unite(e.u, e.v) ? 1 : 0;
  if (merges != g_.num_vertices - 1) throw FormatError("graph is disconnected; decision set empty");
}

bool SpanningTreeInstance::contains(const Action& v) const {
  if (static_cast<int>(v.size()) != g_.num_vertices - 1) return false;
  detail::UnionFind uf(g_.num_vertices);
  int found = 0;
  for (const Edge& e : g_.edges) {
    if (!v.contains(e.label)) continue;
    ++found;
    if (!uf.unite(e.u, e.v)) return false;  // cycle
  }
  // n-1 acyclic edges span exactly one component.
  return found == static_cast<int>(v.size());
}

bool SpanningTreeInstance::emit_awake(const SleepingSet& sleeping, std::size_t limit,
                                      std::vector<Action>& out) const {
  const int nv = g_.num_vertices;
  std::vector<int> awake;
  for (int i = 0; i < static_cast<int>(g_.edges.size()); ++i)
    if (!sleeping.contains(g_.edges[i].label)) awake.push_back(i);
  if (static_cast<int>(awake.size()) < nv - 1) return false;

  // Greedy feasibility first; bail early when no awake spanning tree exists
  // or only one action is requested.
  {
    detail::UnionFind uf(nv);
    std::vector<Label> tree;
    for (int i : awake)
      if (uf.unite(g_.edges[i].u, g_.edges[i].v)) tree.push_back(g_.edges[i].label);
    if (static_cast<int>(tree.size()) != nv - 1) return false;
    if (limit <= 1) {
      if (limit == 1) out.push_back(Action(std::move(tree)));
      return true;  // possibly more
    }
  }

  if (binomial_capped(static_cast<long long>(awake.size()), nv - 1, kCombinationBudget) >
      kCombinationBudget)
    return true;  // too many combinations to visit; report truncation

  bool truncated = false;
  detail::for_each_combination(static_cast<int>(awake.size()), nv - 1,
                               [&](const std::vector<int>& idx) {
                                 detail::UnionFind uf(nv);
                                 std::vector<Label> labels;
                                 for (int pos : idx) {
                                   const Edge& e = g_.edges[awake[pos]];
                                   if (!uf.unite(e.u, e.v)) return true;  // cycle, next combination
                                   labels.push_back(e.label);
                                 }
                                 if (out.size() >= limit) {
                                   truncated = true;
                                   return false;
                                 }
                                 out.push_back(Action(std::move(labels)));
                                 return true;
                               });
  return truncated;
}

std::optional<MinLossResult> SpanningTreeInstance::min_loss_awake(const SleepingSet& sleeping,
                                                                  const LossFunction& losses) const {
  // Kruskal over awake edges sorted by (loss, label).
  std::vector<int> awake;
  for (int i = 0; i < static_cast<int>(g_.edges.size()); ++i)
    if (!sleeping.contains(g_.edges[i].label)) awake.push_back(i);
  std::sort(awake.begin(), awake.end(), [&](int a, int b) {
    const double la = losses.at(g_.edges[a].label);
    const double lb = losses.at(g_.edges[b].label);
    if (la != lb) return la < lb;
    return g_.edges[a].label < g_.edges[b].label;
  });
  detail::UnionFind uf(g_.num_vertices);
  std::vector<Label> tree;
  for (int i : awake)
    if (uf.unite(g_.edges[i].u, g_.edges[i].v)) tree.push_back(g_.edges[i].label);
  if (static_cast<int>(tree.size()) != g_.num_vertices - 1) return std::nullopt;
  Action act{std::move(tree)};
  double value = 0.0;
  for (const Label& l : act) value += losses.at(l);
  return MinLossResult{act, value};
}

}  // namespace sleepcomb
