#include "sleepcomb/game.hpp"

#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

namespace {
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

double GameHistory::total_algo_loss() const {
  double total = 0.0;
  for (const RoundRecord& r : rounds)
    if (!r.skipped()) total += action_loss(*r.played, r.losses);
  return total;
}

void GameHistory::to_csv(std::ostream& os) const {
  os << "round,skipped,chosen_action,sleeping,algo_loss\n";
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const RoundRecord& r = rounds[i];
    os << (i + 1) << ',' << (r.skipped() ? 1 : 0) << ',';
    if (!r.skipped()) os << r.played->str();
    os << ',' << r.sleeping.str() << ',';
    os << (r.skipped() ? "0" : fmt_double(action_loss(*r.played, r.losses)));
    os << '\n';
  }
}

std::string GameHistory::to_csv_string() const {
  std::ostringstream os;
  to_csv(os);
  return os.str();
}

GameHistory run_game(const Instance& instance, Adversary& adversary, SleepingLearner& learner,
                     int rounds) {
  if (rounds < 1) throw FormatError("round count must be >= 1");
  GameHistory history;
  history.rounds.reserve(rounds);
  for (int t = 1; t <= rounds; ++t) {
    auto [sleeping, losses] = adversary.round(t, history);
    std::optional<Action> played = learner.step(sleeping);
    if (played) {
      if (played->intersects(sleeping))
        throw ProtocolViolation("round " + std::to_string(t) + ": played a sleeping action");
      if (!instance.contains(*played))
        throw ProtocolViolation("round " + std::to_string(t) + ": played a non-member action");
      learner.feed(losses);
    } else if (instance.has_awake(sleeping)) {
      throw ProtocolViolation("round " + std::to_string(t) + ": skipped with awake actions");
    }
    history.rounds.push_back(RoundRecord{std::move(sleeping), std::move(played), std::move(losses)});
  }
  return history;
}

std::pair<SleepingSet, LossFunction> ScriptedAdversary::round(int t, const GameHistory&) {
  if (t < 1 || t > static_cast<int>(script_.size()))
    throw ProtocolViolation("scripted adversary has no round " + std::to_string(t));
  return script_[t - 1];
}

IidAdversary::IidAdversary(const Instance& instance, Config config)
    : ground_(instance.ground()), config_(config), state_(config.seed) {}

std::pair<SleepingSet, LossFunction> IidAdversary::round(int, const GameHistory&) {
  std::mt19937_64 rng(state_);
  state_ = rng();  // fresh deterministic stream per round
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> quant(
      0, config_.denominator > 0 ? config_.denominator : 1);

  SleepingSet sleeping;
  LossFunction losses(config_.loss_lo < 0.0 ? LossRange::SignedUnit : LossRange::UnitInterval);
  for (const Label& l : ground_) {
    if (unit(rng) < config_.sleep_prob) sleeping.insert(l);
    const double frac = static_cast<double>(quant(rng)) / config_.denominator;
    losses.set(l, config_.loss_lo + frac * (config_.loss_hi - config_.loss_lo));
  }
  return {std::move(sleeping), std::move(losses)};
}

}  // namespace sleepcomb
