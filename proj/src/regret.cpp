#include "sleepcomb/regret.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

double per_action_regret(const GameHistory& history, const Action& comparator) {
  double regret = 0.0;
  for (const RoundRecord& r : history.rounds) {
    if (r.skipped()) continue;
    if (comparator.intersects(r.sleeping)) continue;
    regret += action_loss(*r.played, r.losses) - action_loss(comparator, r.losses);
  }
  return regret;
}

Action top_awake(const std::vector<Action>& awake_sorted, const Ranking& ranking) {
  for (const Action& v : ranking.prefix) {
    if (std::binary_search(awake_sorted.begin(), awake_sorted.end(), v)) return v;
  }
  // Completion rule: remaining actions in label-lexicographic order. The
  // awake list is sorted, so the first one outside the prefix is the top.
  for (const Action& v : awake_sorted) {
    if (std::find(ranking.prefix.begin(), ranking.prefix.end(), v) == ranking.prefix.end())
      return v;
  }
  throw ProtocolViolation("top_awake called with an empty awake set");
}

double ranking_loss(const Instance& instance, const GameHistory& history, const Ranking& ranking,
                    std::size_t cap) {
  double total = 0.0;
  for (const RoundRecord& r : history.rounds) {
    if (r.skipped()) continue;
    const std::vector<Action> awake = instance.enumerate_awake(r.sleeping, cap);
    total += action_loss(top_awake(awake, ranking), r.losses);
  }
  return total;
}

double ranking_regret(const Instance& instance, const GameHistory& history, const Ranking& ranking,
                      std::size_t cap) {
  return history.total_algo_loss() - ranking_loss(instance, history, ranking, cap);
}

std::pair<Ranking, double> best_ranking_bruteforce(const Instance& instance,
                                                   const GameHistory& history,
                                                   std::size_t max_actions, std::size_t cap) {
  std::vector<Action> actions = instance.enumerate(cap);
  if (actions.size() > max_actions)
    throw TooLarge("decision set too large for ranking brute force: " +
                   std::to_string(actions.size()));

  // Cache per-round awake lists and per-action losses.
  struct RoundView {
    std::vector<Action> awake;
    const LossFunction* losses;
  };
  std::vector<RoundView> views;
  for (const RoundRecord& r : history.rounds) {
    if (r.skipped()) continue;
    views.push_back({instance.enumerate_awake(r.sleeping, cap), &r.losses});
  }

  std::vector<int> perm(actions.size());
  std::iota(perm.begin(), perm.end(), 0);
  bool have_best = false;
  Ranking best;
  double best_value = 0.0;
  // actions is sorted, so iterating permutations of indices in lexicographic
  // order visits action sequences in label-lexicographic order; keeping the
  // first strict improvement yields the lexicographically smallest winner.
  do {
    Ranking cand;
    cand.prefix.reserve(perm.size());
    for (int i : perm) cand.prefix.push_back(actions[i]);
    double value = 0.0;
    for (const RoundView& view : views)
      value += action_loss(top_awake(view.awake, cand), *view.losses);
    if (!have_best || value < best_value) {
      have_best = true;
      best = std::move(cand);
      best_value = value;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_value};
}

}  // namespace sleepcomb
