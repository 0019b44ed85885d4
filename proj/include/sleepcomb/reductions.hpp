#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "sleepcomb/disjunctions.hpp"
#include "sleepcomb/extensible.hpp"
#include "sleepcomb/game.hpp"
#include "sleepcomb/hard_instances.hpp"
#include "sleepcomb/regret.hpp"

namespace sleepcomb {

/// Number of bits used to encode round indices for a horizon: max(1, ceil(log2 T)).
int bits_for_horizon(int horizon);

/// Per-round bit patterns for the per-action wrapper. Deterministic mode
/// emits the binary encoding of t-1 (least-significant bit first), which is
/// distinct for every round of the horizon; stochastic mode draws uniform
/// bits with p = multiplier * ceil(log2 T), making repeats unlikely.
class BitPatternSource {
 public:
  enum class Mode { Deterministic, StochasticIid };

  BitPatternSource(Mode mode, int horizon, int p_multiplier, std::uint64_t seed);

  Mode mode() const { return mode_; }
  int p() const { return p_; }
  std::vector<int> next();
  const std::vector<std::vector<int>>& log() const { return log_; }

 private:
  Mode mode_;
  int horizon_;
  int p_;
  int t_ = 0;
  std::mt19937_64 rng_;
  std::vector<std::vector<int>> log_;
};

/// Wrapper that turns a ranking-regret learner on the extended instance
/// into a per-action-regret learner on the base instance. Each round the
/// complement of the round's bit pattern sleeps (along with the permanently
/// sleeping elements), the inner learner picks a derived action, and the
/// projection of that action is played; inner losses are the base losses on
/// base elements and zero on bit elements. Base losses must be in [0,1].
class PerActionWrapper : public SleepingLearner {
 public:
  struct Config {
    int horizon = 0;
    BitPatternSource::Mode mode = BitPatternSource::Mode::Deterministic;
    int p_multiplier = 2;  // stochastic mode only
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultEnumCap;
    MinCutGadget gadget = MinCutGadget::SeriesPair;
  };

  using InnerFactory = std::function<std::unique_ptr<SleepingLearner>(const Instance& derived)>;

  PerActionWrapper(InstancePtr base, Config config, const InnerFactory& make_inner);

  std::optional<Action> step(const SleepingSet& sleeping) override;
  void feed(const LossFunction& losses) override;

  const ExtendedInstance& extended() const { return ext_; }
  /// The inner learner's game transcript on the derived instance.
  const GameHistory& derived_history() const { return derived_history_; }
  const std::vector<std::vector<int>>& patterns() const { return patterns_.log(); }

 private:
  Config config_;
  ExtendedInstance ext_;
  BitPatternSource patterns_;
  std::unique_ptr<SleepingLearner> inner_;
  GameHistory derived_history_;
};

/// The comparator ranking whose ranking regret upper-bounds per-action
/// regret against `comparator`: the t-th entry joins round t's bit elements
/// with the comparator when it was awake, else with the awake base-loss
/// minimizer of that round (label-lexicographic ties). Rounds with no awake
/// base action contribute no entry.
Ranking build_comparator_ranking(const ExtendedInstance& ext,
                                 const std::vector<std::vector<int>>& patterns,
                                 const GameHistory& base_history, const Action& comparator,
                                 std::size_t cap = kDefaultEnumCap);

/// Losses assigned by the disjunction reduction in units of 1/(n+1):
/// a non-F awake element costs 1-y, the F element costs (2n+1)y - n.
long long disj_unit_loss(const Label& element, int y, int n);

/// Online disjunction learner driven by a sleeping optimizer on a hard
/// instance. Each round the elements tagged with the complement of the
/// input bits sleep, the inner learner picks an awake action, and the
/// prediction is 1 exactly when the F element was avoided.
class DisjunctionLearner {
 public:
  DisjunctionLearner(HardInstance hard, std::unique_ptr<SleepingLearner> inner);

  int predict(const std::vector<int>& x);  // returns the round's prediction
  void update(int y);                      // reveals the label, feeds losses

  struct DisjRound {
    std::vector<int> x;
    int predicted = 0;
    int label = 0;
    Action played;
  };

  const HardInstance& hard() const { return hard_; }
  const std::vector<DisjRound>& rounds() const { return rounds_; }
  /// The inner optimizer's transcript on the hard instance.
  const GameHistory& inner_history() const { return inner_history_; }

  static SleepingSet sleeping_for_input(const std::vector<int>& x);
  static LossFunction round_losses(const HardInstance& hard, const SleepingSet& sleeping, int y);

 private:
  HardInstance hard_;
  std::unique_ptr<SleepingLearner> inner_;
  std::vector<DisjRound> rounds_;
  GameHistory inner_history_;
  bool awaiting_update_ = false;
};

/// The m+1 actions tied to a disjunction: entry j flips the first j-1
/// relevant literals, asserts literal j, stars the rest, and takes T; the
/// last entry flips every literal and takes F. Exactly one is awake per
/// round and its loss equals the disjunction's prediction error.
std::vector<Action> build_dphi(const Disjunction& phi, int n);

/// The unique awake member of build_dphi under the sleeping set of input x,
/// together with its T-membership. Throws ConstructionDefect when the
/// member is missing or not unique, or when T-membership disagrees with
/// phi(x).
std::pair<Action, bool> verify_dphi_round(const Disjunction& phi, const std::vector<int>& x,
                                          int n);

}  // namespace sleepcomb
