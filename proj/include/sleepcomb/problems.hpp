#pragma once

#include <vector>

#include "sleepcomb/graph.hpp"
#include "sleepcomb/instance.hpp"

namespace sleepcomb {

/// s-t paths in a graph; the ground set is the edge set. Paths are simple
/// (no repeated vertex). The solver runs a topological relaxation when the
/// awake subgraph is acyclic (any losses) and Dijkstra otherwise
/// (nonnegative losses only).
class ShortestPathInstance : public Instance {
 public:
  explicit ShortestPathInstance(Graph g);
  Family family() const override { return Family::ShortestPath; }
  const Graph& graph() const { return g_; }
  bool contains(const Action& v) const override;
  std::optional<MinLossResult> min_loss_awake(const SleepingSet& sleeping,
                                              const LossFunction& losses) const override;

 protected:
  bool emit_awake(const SleepingSet& sleeping, std::size_t limit,
                  std::vector<Action>& out) const override;

 private:
  Graph g_;
};

/// Spanning trees of an undirected graph. Kruskal on awake edges plus a
/// connectivity check.
class SpanningTreeInstance : public Instance {
 public:
  explicit SpanningTreeInstance(Graph g);
  Family family() const override { return Family::SpanningTree; }
  const Graph& graph() const { return g_; }
  bool contains(const Action& v) const override;
  std::optional<MinLossResult> min_loss_awake(const SleepingSet& sleeping,
                                              const LossFunction& losses) const override;

 protected:
  bool emit_awake(const SleepingSet& sleeping, std::size_t limit,
                  std::vector<Action>& out) const override;

 private:
  Graph g_;
};

/// All k-element subsets of the ground set.
class KSubsetsInstance : public Instance {
 public:
  KSubsetsInstance(int k, std::vector<Label> ground);
  Family family() const override { return Family::KSubsets; }
  int k() const { return k_; }
  bool contains(const Action& v) const override;
  std::optional<MinLossResult> min_loss_awake(const SleepingSet& sleeping,
                                              const LossFunction& losses) const override;

 protected:
  bool emit_awake(const SleepingSet& sleeping, std::size_t limit,
                  std::vector<Action>& out) const override;

 private:
  int k_;
};

/// Maximal matchings of the complete bipartite graph with k left and
/// m >= k right nodes; every maximal matching saturates the left side, so
/// actions are injective left-to-right assignments of exactly k edges.
/// The solver is a shortest-augmenting-path assignment after a uniform
/// shift to nonnegative costs.
class TruncatedPermInstance : public Instance {
 public:
  /// edge_labels[i][j] labels the edge from left node i to right node j.
  TruncatedPermInstance(int k, int m, std::vector<std::vector<Label>> edge_labels);
  static TruncatedPermInstance make_anonymous(int k, int m);

  Family family() const override { return Family::TruncatedPerm; }
  int k() const { return k_; }
  int m() const { return m_; }
  const Label& edge_label(int i, int j) const { return edge_labels_[i][j]; }
  bool contains(const Action& v) const override;
  std::optional<MinLossResult> min_loss_awake(const SleepingSet& sleeping,
                                              const LossFunction& losses) const override;

 protected:
  bool emit_awake(const SleepingSet& sleeping, std::size_t limit,
                  std::vector<Action>& out) const override;

 private:
  std::pair<int, int> locate(const Label& l) const;  // (left, right) of an edge label

  int k_;
  int m_;
  std::vector<std::vector<Label>> edge_labels_;
};

/// Maximal matchings of a given graph (no augmenting edge of the full edge
/// set can be added). The minimum-loss awake maximal matching is found by
/// enumeration; there is no general polynomial solver for this offline
/// problem, so instances must stay at desk scale.
class BipartiteMatchingInstance : public Instance {
 public:
  explicit BipartiteMatchingInstance(Graph g);
  Family family() const override { return Family::BipartiteMatching; }
  const Graph& graph() const { return g_; }
  bool contains(const Action& v) const override;
  std::optional<MinLossResult> min_loss_awake(const SleepingSet& sleeping,
                                              const LossFunction& losses) const override;

 protected:
  bool emit_awake(const SleepingSet& sleeping, std::size_t limit,
                  std::vector<Action>& out) const override;

 private:
  Graph g_;
};

/// Edge sets whose removal disconnects s from t. Any disconnecting set is a
/// member, not only minimal ones. The solver is max-flow with awake-edge
/// capacities equal to losses (nonnegative required) and sleeping edges
/// effectively uncuttable.
class MinCutInstance : public Instance {
 public:
  explicit MinCutInstance(Graph g);
  Family family() const override { return Family::MinCut; }
  const Graph& graph() const { return g_; }
  bool contains(const Action& v) const override;
  std::optional<MinLossResult> min_loss_awake(const SleepingSet& sleeping,
                                              const LossFunction& losses) const override;

 protected:
  bool emit_awake(const SleepingSet& sleeping, std::size_t limit,
                  std::vector<Action>& out) const override;

 private:
  bool disconnects(const Action& removed) const;

  Graph g_;
};

}  // namespace sleepcomb
