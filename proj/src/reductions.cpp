#include "sleepcomb/reductions.hpp"

#include <algorithm>
#include <cmath>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

int bits_for_horizon(int horizon) {
  if (horizon < 1) throw FormatError("horizon must be >= 1");
  int p = 0;
  while ((1LL << p) < horizon) ++p;
  return std::max(1, p);
}

BitPatternSource::BitPatternSource(Mode mode, int horizon, int p_multiplier, std::uint64_t seed)
    : mode_(mode), horizon_(horizon), rng_(seed) {
  const int base = bits_for_horizon(horizon);
  if (mode == Mode::Deterministic) {
    p_ = base;
  } else {
    if (p_multiplier < 1) throw FormatError("pattern multiplier must be >= 1");
    p_ = std::max(1, p_multiplier * bits_for_horizon(horizon));
  }
}

std::vector<int> BitPatternSource::next() {
  if (t_ >= horizon_) throw ProtocolViolation("pattern source exhausted its horizon");
  std::vector<int> bits(p_, 0);
  if (mode_ == Mode::Deterministic) {
    for (int i = 0; i < p_; ++i) bits[i] = (t_ >> i) & 1;  // encoding of t-1, lsb first
  } else {
    for (int i = 0; i < p_; ++i) bits[i] = static_cast<int>(rng_() & 1);
  }
  ++t_;
  log_.push_back(bits);
  return bits;
}

PerActionWrapper::PerActionWrapper(InstancePtr base, Config config, const InnerFactory& make_inner)
    : config_(config),
      ext_(extend(base, config.mode == BitPatternSource::Mode::Deterministic
                            ? bits_for_horizon(config.horizon)
                            : std::max(1, config.p_multiplier * bits_for_horizon(config.horizon)),
                  config.gadget)),
      patterns_(config.mode, config.horizon, config.p_multiplier, config.seed),
      inner_(make_inner(*ext_.derived)) {}

std::optional<Action> PerActionWrapper::step(const SleepingSet& sleeping) {
  if (!sleeping.subset_of(ext_.base->ground_set()))
    throw ProtocolViolation("sleeping set leaves the base ground set");
  const std::vector<int> bits = patterns_.next();
  const SleepingSet derived_sleeping =
      sleeping.unioned(ext_.complement_bits(bits)).unioned(ext_.permanently_sleeping);

  std::optional<Action> inner_action = inner_->step(derived_sleeping);
  if (!inner_action) {
    derived_history_.rounds.push_back(RoundRecord{derived_sleeping, std::nullopt, LossFunction{}});
    return std::nullopt;
  }
  if (inner_action->intersects(derived_sleeping))
    throw ProtocolViolation("inner learner played a sleeping derived action");
  if (!ext_.derived->contains(*inner_action))
    throw ProtocolViolation("inner learner played a non-member derived action");
  derived_history_.rounds.push_back(RoundRecord{derived_sleeping, inner_action, LossFunction{}});
  return ext_.project(*inner_action);
}

void PerActionWrapper::feed(const LossFunction& losses) {
  for (const auto& [element, value] : losses.values())
    if (value < 0.0)
      throw UnsupportedLossRange("per-action reduction assumes losses in [0,1]");
  LossFunction derived_losses(LossRange::UnitInterval);
  for (const auto& [element, value] : losses.values()) derived_losses.set(element, value);
  for (const Label& l : ext_.bit_labels) derived_losses.set(l, 0.0);
  if (derived_history_.rounds.empty() || derived_history_.rounds.back().skipped())
    throw ProtocolViolation("feed without a played round");
  derived_history_.rounds.back().losses = derived_losses;
  inner_->feed(derived_losses);
}

Ranking build_comparator_ranking(const ExtendedInstance& ext,
                                 const std::vector<std::vector<int>>& patterns,
                                 const GameHistory& base_history, const Action& comparator,
                                 std::size_t cap) {
  if (patterns.size() < base_history.rounds.size())
    throw FormatError("fewer bit patterns than rounds");
  Ranking ranking;
  for (std::size_t t = 0; t < base_history.rounds.size(); ++t) {
    const RoundRecord& round = base_history.rounds[t];
    const std::vector<Action> awake = ext.base->enumerate_awake(round.sleeping, cap);
    if (awake.empty()) continue;
    const Action* star = nullptr;
    if (!comparator.intersects(round.sleeping)) {
      star = &comparator;
    } else {
      double best = 0.0;  // awake is sorted, strict < keeps lexicographic ties
      for (const Action& v : awake) {
        const double value = action_loss(v, round.losses);
        if (star == nullptr || value < best) {
          star = &v;
          best = value;
        }
      }
    }
    const Action entry = ext.bit_action(patterns[t]).unioned(*star);
    if (std::find(ranking.prefix.begin(), ranking.prefix.end(), entry) == ranking.prefix.end())
      ranking.prefix.push_back(entry);
  }
  return ranking;
}

long long disj_unit_loss(const Label& element, int y, int n) {
  if (y != 0 && y != 1) throw FormatError("label bit must be 0 or 1");
  if (element.is_false()) return static_cast<long long>(2 * n + 1) * y - n;
  return 1 - y;
}

DisjunctionLearner::DisjunctionLearner(HardInstance hard, std::unique_ptr<SleepingLearner> inner)
    : hard_(std::move(hard)), inner_(std::move(inner)) {}

SleepingSet DisjunctionLearner::sleeping_for_input(const std::vector<int>& x) {
  std::vector<Label> labels;
  labels.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] != 1) throw FormatError("input bits must be 0 or 1");
    // Element (i, 1 - x_i) sleeps; stars and terminals stay awake.
    labels.push_back(Label::tagged(static_cast<int>(i) + 1, x[i] == 1 ? Tag::Zero : Tag::One));
  }
  return SleepingSet(std::move(labels));
}

LossFunction DisjunctionLearner::round_losses(const HardInstance& hard,
                                              const SleepingSet& sleeping, int y) {
  LossFunction losses(LossRange::SignedUnit);
  const double denom = hard.n + 1;
  for (const Label& e : hard.instance->ground()) {
    if (sleeping.contains(e)) continue;
    losses.set(e, static_cast<double>(disj_unit_loss(e, y, hard.n)) / denom);
  }
  return losses;
}

int DisjunctionLearner::predict(const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != hard_.n)
    throw FormatError("input vector length must equal the hard-instance parameter");
  if (awaiting_update_) throw ProtocolViolation("predict called twice without update");
  const SleepingSet sleeping = sleeping_for_input(x);
  std::optional<Action> played = inner_->step(sleeping);
  if (!played)
    throw ConstructionDefect("no awake action on a hard instance; richness guarantees one");
  if (played->intersects(sleeping))
    throw ProtocolViolation("inner optimizer played a sleeping action");
  if (!hard_.instance->contains(*played))
    throw ProtocolViolation("inner optimizer played a non-member action");

  DisjRound round;
  round.x = x;
  round.played = *played;
  round.predicted = played->contains(Label::false_elem()) ? 0 : 1;
  rounds_.push_back(round);
  inner_history_.rounds.push_back(RoundRecord{sleeping, played, LossFunction{}});
  awaiting_update_ = true;
  return rounds_.back().predicted;
}

void DisjunctionLearner::update(int y) {
  if (!awaiting_update_) throw ProtocolViolation("update called before predict");
  if (y != 0 && y != 1) throw FormatError("label bit must be 0 or 1");
  awaiting_update_ = false;
  rounds_.back().label = y;
  RoundRecord& record = inner_history_.rounds.back();
  record.losses = round_losses(hard_, record.sleeping, y);
  inner_->feed(record.losses);
}

std::vector<Action> build_dphi(const Disjunction& phi, int n) {
  const std::vector<int> relevant = phi.relevant();
  const int m = static_cast<int>(relevant.size());
  // Stars for every irrelevant index.
  std::vector<Label> irrelevant_stars;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(relevant.begin(), relevant.end(), i))
      irrelevant_stars.push_back(Label::tagged(i, Tag::Star));

  auto literal = [&](int j, bool agree) {
    // The element matching (agree) or flipping (!agree) literal j.
    const bool positive = phi.is_positive(relevant[j]);
    const bool value = agree ? positive : !positive;
    return Label::tagged(relevant[j], value ? Tag::One : Tag::Zero);
  };

  std::vector<Action> dphi;
  dphi.reserve(m + 1);
  for (int j = 0; j < m; ++j) {
    std::vector<Label> labels = irrelevant_stars;
    for (int l = 0; l < j; ++l) labels.push_back(literal(l, false));
    labels.push_back(literal(j, true));
    for (int l = j + 1; l < m; ++l) labels.push_back(Label::tagged(relevant[l], Tag::Star));
    labels.push_back(Label::true_elem());
    dphi.push_back(Action(std::move(labels)));
  }
  std::vector<Label> last = irrelevant_stars;
  for (int l = 0; l < m; ++l) last.push_back(literal(l, false));
  last.push_back(Label::false_elem());
  dphi.push_back(Action(std::move(last)));
  return dphi;
}

std::pair<Action, bool> verify_dphi_round(const Disjunction& phi, const std::vector<int>& x,
                                          int n) {
  const SleepingSet sleeping = DisjunctionLearner::sleeping_for_input(x);
  const std::vector<Action> dphi = build_dphi(phi, n);
  const Action* awake = nullptr;
  for (const Action& v : dphi) {
    if (v.intersects(sleeping)) continue;
    if (awake != nullptr)
      throw ConstructionDefect("two awake members: " + awake->str() + " and " + v.str());
    awake = &v;
  }
  if (awake == nullptr) throw ConstructionDefect("no awake member of the disjunction's action set");
  const bool has_true = awake->contains(Label::true_elem());
  if (has_true != phi.eval(x))
    throw ConstructionDefect("T-membership disagrees with the disjunction value");
  return {*awake, has_true};
}

}  // namespace sleepcomb
