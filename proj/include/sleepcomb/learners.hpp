#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sleepcomb/game.hpp"
#include "sleepcomb/instance.hpp"

namespace sleepcomb {

/// Uniform choice over the awake set. Bit-reproducible for a fixed seed.
class RandomAwake : public SleepingLearner {
 public:
  RandomAwake(const Instance& instance, std::uint64_t seed, std::size_t cap = kDefaultEnumCap);
  std::optional<Action> step(const SleepingSet& sleeping) override;
  void feed(const LossFunction& losses) override;

 private:
  const Instance& instance_;
  std::size_t cap_;
  std::mt19937_64 rng_;
};

/// Plays the awake action with the smallest cumulative loss over the rounds
/// it was awake so far (zero for never-seen actions); ties go to the
/// label-lexicographically smaller action.
class FollowAwakeLeader : public SleepingLearner {
 public:
  explicit FollowAwakeLeader(const Instance& instance, std::size_t cap = kDefaultEnumCap);
  std::optional<Action> step(const SleepingSet& sleeping) override;
  void feed(const LossFunction& losses) override;

 private:
  const Instance& instance_;
  std::size_t cap_;
  std::vector<Action> last_awake_;
  std::map<Action, double> cumulative_;
};

/// Multiplicative weights over the enumerated decision set with the
/// specialists-style sleeping update: awake actions decay by their own
/// loss, sleeping actions by the algorithm's mix factor, so a sleeping
/// action's share of the total weight is unchanged.
///
/// Weights live in log space; normalization happens lazily at sampling
/// time, so weights stay finite for any horizon.
class SleepingHedge : public SleepingLearner {
 public:
  struct Config {
    double loss_lo = -1.0;  // per-action loss span, used for the default eta
    double loss_hi = 1.0;
    int horizon = 0;
    std::optional<double> eta;
    std::uint64_t seed = 0;
  };

  SleepingHedge(const Instance& instance, Config config, std::size_t cap = kDefaultEnumCap);

  std::optional<Action> step(const SleepingSet& sleeping) override;
  void feed(const LossFunction& losses) override;

  double eta() const { return eta_; }
  /// Expected (probability-weighted) loss per played round, alongside the
  /// sampled losses that the game ledger records.
  const std::vector<double>& expected_losses() const { return expected_losses_; }
  double log_weight(const Action& v) const;
  /// log of the total weight mass, for weight-share invariance checks.
  double total_log_weight() const;

 private:
  const Instance& instance_;
  double eta_ = 0.0;
  std::mt19937_64 rng_;
  std::vector<Action> actions_;       // sorted decision set
  std::vector<double> log_weights_;   // aligned with actions_
  std::vector<std::size_t> last_awake_;  // indices into actions_
  std::vector<double> last_probs_;
  std::vector<double> expected_losses_;
};

struct LearnerSpec {
  std::string kind;  // "random" | "ftl" | "hedge"
  std::uint64_t seed = 0;
  SleepingHedge::Config hedge;
  std::size_t cap = kDefaultEnumCap;
};

std::unique_ptr<SleepingLearner> make_learner(const LearnerSpec& spec, const Instance& instance);

}  // namespace sleepcomb
