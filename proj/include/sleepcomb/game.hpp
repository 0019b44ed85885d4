#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "sleepcomb/action.hpp"
#include "sleepcomb/instance.hpp"
#include "sleepcomb/loss.hpp"

namespace sleepcomb {

struct RoundRecord {
  SleepingSet sleeping;
  std::optional<Action> played;  // nullopt = skipped (no awake action)
  LossFunction losses;

  bool skipped() const { return !played.has_value(); }
};

struct GameHistory {
  std::vector<RoundRecord> rounds;

  /// Total loss of the algorithm over non-skipped rounds.
  double total_algo_loss() const;

  /// CSV with columns round,skipped,chosen_action,sleeping,algo_loss.
  /// Labels are semicolon-joined in sorted order; skipped rounds keep an
  /// empty chosen_action and a zero loss.
  void to_csv(std::ostream& os) const;
  std::string to_csv_string() const;
};

/// Chooses a sleeping set and a loss function at the start of each round.
/// Losses are fixed before the learner's action is seen; adaptive
/// adversaries may inspect the past history.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::pair<SleepingSet, LossFunction> round(int t, const GameHistory& past) = 0;
};

/// Round-driven learner interface: step() returns an awake action or
/// nullopt to skip (only valid when no action is awake); feed() delivers the
/// revealed losses of the round, and is called only on played rounds.
class SleepingLearner {
 public:
  virtual ~SleepingLearner() = default;
  virtual std::optional<Action> step(const SleepingSet& sleeping) = 0;
  virtual void feed(const LossFunction& losses) = 0;
};

/// Runs T rounds of the sleeping game. Throws ProtocolViolation when the
/// learner plays a non-member or sleeping action, or skips a round that has
/// awake actions.
GameHistory run_game(const Instance& instance, Adversary& adversary, SleepingLearner& learner,
                     int rounds);

/// Scripted adversary replaying fixed per-round pairs.
class ScriptedAdversary : public Adversary {
 public:
  explicit ScriptedAdversary(std::vector<std::pair<SleepingSet, LossFunction>> script)
      : script_(std::move(script)) {}
  std::pair<SleepingSet, LossFunction> round(int t, const GameHistory&) override;

 private:
  std::vector<std::pair<SleepingSet, LossFunction>> script_;
};

/// I.i.d. adversary: each element sleeps independently with probability
/// sleep_prob, and element losses are drawn uniformly from the given range,
/// quantized to multiples of 1/denominator (keeping sums exact in doubles
/// when the denominator is a power of two).
class IidAdversary : public Adversary {
 public:
  struct Config {
    double sleep_prob = 0.25;
    double loss_lo = 0.0;
    double loss_hi = 1.0;
    int denominator = 16;
    std::uint64_t seed = 0;
  };
  IidAdversary(const Instance& instance, Config config);
  std::pair<SleepingSet, LossFunction> round(int t, const GameHistory&) override;

 private:
  std::vector<Label> ground_;
  Config config_;
  std::uint64_t state_;
};

}  // namespace sleepcomb
