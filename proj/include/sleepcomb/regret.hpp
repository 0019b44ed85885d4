#pragma once

#include <utility>
#include <vector>

#include "sleepcomb/game.hpp"
#include "sleepcomb/instance.hpp"

namespace sleepcomb {

/// Per-action regret against a fixed comparator: the loss difference summed
/// over exactly the rounds in which the comparator is awake. Rounds where
/// the comparator sleeps, and skipped rounds, contribute nothing.
double per_action_regret(const GameHistory& history, const Action& comparator);

/// A ranking of the decision set: an explicit prefix of distinct actions
/// followed by the remaining actions in label-lexicographic order.
struct Ranking {
  std::vector<Action> prefix;
};

/// The highest-ranked member of a sorted awake list under a ranking:
/// earliest prefix entry that is awake, else the lexicographically smallest
/// awake action outside the prefix.
Action top_awake(const std::vector<Action>& awake_sorted, const Ranking& ranking);

/// Total loss of the policy that plays the top-ranked awake action in every
/// non-skipped round.
double ranking_loss(const Instance& instance, const GameHistory& history, const Ranking& ranking,
                    std::size_t cap = kDefaultEnumCap);

/// Algorithm loss on non-skipped rounds minus ranking_loss.
double ranking_regret(const Instance& instance, const GameHistory& history, const Ranking& ranking,
                      std::size_t cap = kDefaultEnumCap);

/// Exhaustive search over all |D|! rankings (|D| <= max_actions, default 8).
/// Ties break toward the label-lexicographically smaller action sequence.
std::pair<Ranking, double> best_ranking_bruteforce(const Instance& instance,
                                                   const GameHistory& history,
                                                   std::size_t max_actions = 8,
                                                   std::size_t cap = kDefaultEnumCap);

}  // namespace sleepcomb
