#include <algorithm>
#include <map>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

namespace {
constexpr double kForbidden = 1e18;
}

TruncatedPermInstance::TruncatedPermInstance(int k, int m,
                                             std::vector<std::vector<Label>> edge_labels)
    : k_(k), m_(m), edge_labels_(std::move(edge_labels)) {
  if (k < 1 || m < k) throw FormatError("truncated permutations require 1 <= k <= m");
  if (static_cast<int>(edge_labels_.size()) != k) throw FormatError("edge label matrix has wrong rows");
  std::vector<Label> ground;
  for (const auto& row : edge_labels_) {
    if (static_cast<int>(row.size()) != m) throw FormatError("edge label matrix has wrong columns");
    for (const Label& l : row) ground.push_back(l);
  }
  set_ground(std::move(ground));
}

TruncatedPermInstance TruncatedPermInstance::make_anonymous(int k, int m) {
  std::vector<std::vector<Label>> labels(k, std::vector<Label>(m));
  int id = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) labels[i][j] = Label::anonymous(id++);
  return TruncatedPermInstance(k, m, std::move(labels));
}

std::pair<int, int> TruncatedPermInstance::locate(const Label& l) const {
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < m_; ++j)
      if (edge_labels_[i][j] == l) return {i, j};
  throw FormatError("label is not an edge of the bipartite graph: " + l.str());
}

bool TruncatedPermInstance::contains(const Action& v) const {
  // Maximal matchings of a complete bipartite graph with k <= m saturate the
  // left side: k edges, one per left node, with distinct right nodes.
  if (static_cast<int>(v.size()) != k_) return false;
  std::vector<char> left(k_, 0), right(m_, 0);
  for (const Label& l : v) {
    auto [i, j] = locate(l);
    if (left[i] || right[j]) return false;
    left[i] = right[j] = 1;
  }
  return true;
}

bool TruncatedPermInstance::emit_awake(const SleepingSet& sleeping, std::size_t limit,
                                       std::vector<Action>& out) const {
  // Assign left nodes in order to distinct awake right partners.
  std::vector<char> right_used(m_, 0);
  std::vector<Label> chosen;
  bool truncated = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (truncated) return;
    if (i == k_) {
      if (out.size() >= limit) {
        truncated = true;
        return;
      }
      out.push_back(Action(chosen));
      return;
    }
    for (int j = 0; j < m_; ++j) {
      if (right_used[j]) continue;
      const Label& lab = edge_labels_[i][j];
      if (sleeping.contains(lab)) continue;
      right_used[j] = 1;
      chosen.push_back(lab);
      self(self, i + 1);
      chosen.pop_back();
      right_used[j] = 0;
      if (truncated) return;
    }
  };
  rec(rec, 0);
  return truncated;
}

std::optional<MinLossResult> TruncatedPermInstance::min_loss_awake(const SleepingSet& sleeping,
                                                                   const LossFunction& losses) const {
  // Min-cost assignment via successive shortest augmenting paths with
  // potentials, after shifting awake costs to be nonnegative. Every action
  // has exactly k edges, so a uniform shift preserves the argmin.
  double min_cost = 0.0;
  bool any_awake = false;
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < m_; ++j)
      if (!sleeping.contains(edge_labels_[i][j])) {
        min_cost = any_awake ? std::min(min_cost, losses.at(edge_labels_[i][j])) : losses.at(edge_labels_[i][j]);
        any_awake = true;
      }
  if (!any_awake) return std::nullopt;
  const double shift = min_cost < 0.0 ? -min_cost : 0.0;

  // 1-based; cost[i][j] is the shifted awake cost or a forbidden sentinel.
  std::vector<std::vector<double>> cost(k_ + 1, std::vector<double>(m_ + 1, kForbidden));
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < m_; ++j)
      if (!sleeping.contains(edge_labels_[i][j]))
        cost[i + 1][j + 1] = losses.at(edge_labels_[i][j]) + shift;

  std::vector<double> u(k_ + 1, 0.0), v(m_ + 1, 0.0);
  std::vector<int> p(m_ + 1, 0), way(m_ + 1, 0);
  for (int i = 1; i <= k_; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m_ + 1, kForbidden);
    std::vector<char> used(m_ + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = kForbidden;
      for (int j = 1; j <= m_; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0 || delta >= kForbidden / 2) return std::nullopt;  // no awake augmenting path
      for (int j = 0; j <= m_; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<Label> chosen;
  for (int j = 1; j <= m_; ++j) {
    if (p[j] == 0) continue;
    const Label& lab = edge_labels_[p[j] - 1][j - 1];
    if (sleeping.contains(lab)) return std::nullopt;  // forbidden edge slipped in
    chosen.push_back(lab);
  }
  Action act{std::move(chosen)};
  double value = 0.0;
  for (const Label& l : act) value += losses.at(l);
  return MinLossResult{act, value};
}

}  // namespace sleepcomb
