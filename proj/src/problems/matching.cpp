#include <algorithm>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

namespace {
// 2^22 recursion leaves is the most the enumerator will attempt.
constexpr std::size_t kMaxAwakeEdges = 22;
}

BipartiteMatchingInstance::BipartiteMatchingInstance(Graph g) : g_(std::move(g)) {
  for (const Edge& e : g_.edges)
    if (e.u == e.v) throw FormatError("self-loops are not allowed in matching instances");
  std::vector<Label> ground;
  for (const Edge& e : g_.edges) ground.push_back(e.label);
  set_ground(std::move(ground));
}

bool BipartiteMatchingInstance::contains(const Action& v) const {
  std::vector<char> matched(g_.num_vertices, 0);
  std::size_t found = 0;
  for (const Edge& e : g_.edges) {
    if (!v.contains(e.label)) continue;
    ++found;
    if (matched[e.u] || matched[e.v]) return false;  // not a matching
    matched[e.u] = matched[e.v] = 1;
  }
  if (found != v.size()) return false;
  // Maximality with respect to the full edge set.
  for (const Edge& e : g_.edges)
    if (!matched[e.u] && !matched[e.v]) return false;
  return true;
}

bool BipartiteMatchingInstance::emit_awake(const SleepingSet& sleeping, std::size_t limit,
                                           std::vector<Action>& out) const {
  std::vector<int> awake;
  for (int i = 0; i < static_cast<int>(g_.edges.size()); ++i)
    if (!sleeping.contains(g_.edges[i].label)) awake.push_back(i);
  if (awake.size() > kMaxAwakeEdges) return true;  // refuse; report truncation

  std::vector<char> matched(g_.num_vertices, 0);
  std::vector<Label> chosen;
  bool truncated = false;
  auto maximal = [&]() {
    for (const Edge& e : g_.edges)
      if (!matched[e.u] && !matched[e.v]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (truncated) return;
    if (pos == awake.size()) {
      if (!maximal()) return;
      if (out.size() >= limit) {
        truncated = true;
        return;
      }
      out.push_back(Action(chosen));
      return;
    }
    const Edge& e = g_.edges[awake[pos]];
    if (!matched[e.u] && !matched[e.v]) {
      matched[e.u] = matched[e.v] = 1;
      chosen.push_back(e.label);
      self(self, pos + 1);
      chosen.pop_back();
      matched[e.u] = matched[e.v] = 0;
      if (truncated) return;
    }
    self(self, pos + 1);
  };
  rec(rec, 0);
  return truncated;
}

std::optional<MinLossResult> BipartiteMatchingInstance::min_loss_awake(
    const SleepingSet& sleeping, const LossFunction& losses) const {
  // Enumeration is the solver here: minimum-loss maximal matching has no
  // general polynomial algorithm, and instances stay at desk scale.
  std::vector<Action> awake = enumerate_awake(sleeping);
  if (awake.empty()) return std::nullopt;
  const Action* best = nullptr;
  double best_value = 0.0;
  for (const Action& a : awake) {
    const double value = action_loss(a, losses);
    if (best == nullptr || value < best_value) {
      best = &a;
      best_value = value;
    }
  }
  return MinLossResult{*best, best_value};
}

}  // namespace sleepcomb
