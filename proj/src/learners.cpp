#include "sleepcomb/learners.hpp"

#include <algorithm>
#include <cmath>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

namespace {
double log_sum_exp(const std::vector<double>& values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - m);
  return m + std::log(sum);
}
}  // namespace

RandomAwake::RandomAwake(const Instance& instance, std::uint64_t seed, std::size_t cap)
    : instance_(instance), cap_(cap), rng_(seed) {}

std::optional<Action> RandomAwake::step(const SleepingSet& sleeping) {
  const std::vector<Action> awake = instance_.enumerate_awake(sleeping, cap_);
  if (awake.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, awake.size() - 1);
  return awake[pick(rng_)];
}

void RandomAwake::feed(const LossFunction&) {}

FollowAwakeLeader::FollowAwakeLeader(const Instance& instance, std::size_t cap)
    : instance_(instance), cap_(cap) {}

std::optional<Action> FollowAwakeLeader::step(const SleepingSet& sleeping) {
  last_awake_ = instance_.enumerate_awake(sleeping, cap_);
  if (last_awake_.empty()) return std::nullopt;
  const Action* best = nullptr;
  double best_loss = 0.0;
  for (const Action& v : last_awake_) {  // sorted, so strict < keeps lex ties
    auto it = cumulative_.find(v);
    const double c = it == cumulative_.end() ? 0.0 : it->second;
    if (best == nullptr || c < best_loss) {
      best = &v;
      best_loss = c;
    }
  }
  return *best;
}

void FollowAwakeLeader::feed(const LossFunction& losses) {
  for (const Action& v : last_awake_) cumulative_[v] += action_loss(v, losses);
}

SleepingHedge::SleepingHedge(const Instance& instance, Config config, std::size_t cap)
    : instance_(instance), rng_(config.seed), actions_(instance.enumerate(cap)) {
  if (actions_.empty()) throw FormatError("hedge needs a nonempty decision set");
  log_weights_.assign(actions_.size(), 0.0);
  if (config.eta) {
    eta_ = *config.eta;
  } else {
    const double range = config.loss_hi - config.loss_lo;
    const double horizon = std::max(1, config.horizon);
    const double base = std::sqrt(8.0 * std::log(static_cast<double>(actions_.size())) / horizon);
    eta_ = range > 0.0 ? base / range : 1.0;
  }
  if (eta_ <= 0.0) throw FormatError("hedge eta must be positive");
}

std::optional<Action> SleepingHedge::step(const SleepingSet& sleeping) {
  last_awake_.clear();
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (!actions_[i].intersects(sleeping)) last_awake_.push_back(i);
  if (last_awake_.empty()) return std::nullopt;

  std::vector<double> awake_logs;
  awake_logs.reserve(last_awake_.size());
  for (std::size_t i : last_awake_) awake_logs.push_back(log_weights_[i]);
  const double lse = log_sum_exp(awake_logs);
  last_probs_.clear();
  for (double lw : awake_logs) last_probs_.push_back(std::exp(lw - lse));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng_);
  double cum = 0.0;
  std::size_t chosen = last_awake_.size() - 1;
  for (std::size_t j = 0; j < last_probs_.size(); ++j) {
    cum += last_probs_[j];
    if (u < cum) {
      chosen = j;
      break;
    }
  }
  return actions_[last_awake_[chosen]];
}

void SleepingHedge::feed(const LossFunction& losses) {
  // Mix factor: log sum_j p_j e^{-eta l_j}. Awake weights decay by their
  // own loss, sleeping weights by the mix factor, which keeps every
  // sleeping action's share of the total mass fixed.
  std::vector<double> mix_terms;
  mix_terms.reserve(last_awake_.size());
  double expected = 0.0;
  for (std::size_t j = 0; j < last_awake_.size(); ++j) {
    const double loss = action_loss(actions_[last_awake_[j]], losses);
    expected += last_probs_[j] * loss;
    mix_terms.push_back(std::log(last_probs_[j]) - eta_ * loss);
  }
  expected_losses_.push_back(expected);
  const double mix_log = log_sum_exp(mix_terms);

  std::vector<char> awake_mask(actions_.size(), 0);
  for (std::size_t j = 0; j < last_awake_.size(); ++j) {
    const std::size_t i = last_awake_[j];
    awake_mask[i] = 1;
    log_weights_[i] -= eta_ * action_loss(actions_[i], losses);
  }
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (!awake_mask[i]) log_weights_[i] += mix_log;
}

double SleepingHedge::log_weight(const Action& v) const {
  const auto it = std::lower_bound(actions_.begin(), actions_.end(), v);
  if (it == actions_.end() || *it != v) throw FormatError("unknown action: " + v.str());
  return log_weights_[static_cast<std::size_t>(it - actions_.begin())];
}

double SleepingHedge::total_log_weight() const { return log_sum_exp(log_weights_); }

std::unique_ptr<SleepingLearner> make_learner(const LearnerSpec& spec, const Instance& instance) {
  if (spec.kind == "random") return std::make_unique<RandomAwake>(instance, spec.seed, spec.cap);
  if (spec.kind == "ftl") return std::make_unique<FollowAwakeLeader>(instance, spec.cap);
  if (spec.kind == "hedge") {
    SleepingHedge::Config config = spec.hedge;
    config.seed = spec.seed;
    return std::make_unique<SleepingHedge>(instance, config, spec.cap);
  }
  throw FormatError("unknown learner kind: " + spec.kind);
}

}  // namespace sleepcomb
