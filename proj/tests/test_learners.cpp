#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/game.hpp"
#include "sleepcomb/learners.hpp"
#include "sleepcomb/problems.hpp"
#include "sleepcomb/regret.hpp"

using namespace sleepcomb;

namespace {

std::vector<Label> anon_ground(int d) {
  std::vector<Label> g;
  for (int i = 0; i < d; ++i) g.push_back(Label::anonymous(i));
  return g;
}

LossFunction losses_of(const std::vector<double>& values) {
  LossFunction l(LossRange::UnitInterval);
  for (std::size_t i = 0; i < values.size(); ++i) l.set(Label::anonymous(i), values[i]);
  return l;
}

}  // namespace

TEST_CASE("single awake action is forced for every learner kind") {
  KSubsetsInstance inst(1, anon_ground(3));
  const SleepingSet sleeping{Label::anonymous(0), Label::anonymous(1)};
  const Action only{Label::anonymous(2)};

  RandomAwake random(inst, 7);
  FollowAwakeLeader ftl(inst);
  SleepingHedge hedge(inst, {.loss_lo = 0, .loss_hi = 1, .horizon = 10, .eta = {}, .seed = 7});
  CHECK(*random.step(sleeping) == only);
  CHECK(*ftl.step(sleeping) == only);
  CHECK(*hedge.step(sleeping) == only);
}

TEST_CASE("hedge first round is uniform over the awake set") {
  KSubsetsInstance inst(1, anon_ground(4));
  SleepingHedge hedge(inst, {.loss_lo = 0, .loss_hi = 1, .horizon = 100, .eta = {}, .seed = 42});
  // No feeds between steps, so every step samples the same distribution.
  std::map<Action, int> counts;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) ++counts[*hedge.step(SleepingSet{})];
  REQUIRE(counts.size() == 4);
  for (const auto& [action, count] : counts)
    CHECK(std::abs(count - trials / 4) < 150);  // ~5 sigma for p=1/4
}

TEST_CASE("follow-the-awake-leader replays the hand-traced fold") {
  KSubsetsInstance inst(1, anon_ground(2));
  FollowAwakeLeader ftl(inst);
  const Action a{Label::anonymous(0)};
  const Action b{Label::anonymous(1)};

  CHECK(*ftl.step(SleepingSet{}) == a);  // all zero: lexicographic leader
  ftl.feed(losses_of({1.0, 0.25}));
  CHECK(*ftl.step(SleepingSet{}) == b);  // cumulative a=1, b=0.25
  ftl.feed(losses_of({0.0, 0.5}));
  CHECK(*ftl.step(SleepingSet{}) == b);  // a=1, b=0.75
  // b sleeps: only a remains.
  CHECK(*ftl.step(SleepingSet{Label::anonymous(1)}) == a);
}

TEST_CASE("hedge weight updates") {
  KSubsetsInstance inst(1, anon_ground(3));
  const Action a{Label::anonymous(0)};
  const Action b{Label::anonymous(1)};
  const Action c{Label::anonymous(2)};

  SUBCASE("zero losses leave weights unchanged") {
    SleepingHedge hedge(inst, {.loss_lo = 0, .loss_hi = 1, .horizon = 10, .eta = 0.5, .seed = 1});
    hedge.step(SleepingSet{});
    hedge.feed(losses_of({0.0, 0.0, 0.0}));
    CHECK(hedge.log_weight(a) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hedge.log_weight(b) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hedge.log_weight(c) == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("a one-hot loss decays only that awake action") {
    SleepingHedge hedge(inst, {.loss_lo = 0, .loss_hi = 1, .horizon = 10, .eta = 0.5, .seed = 1});
    hedge.step(SleepingSet{});
    hedge.feed(losses_of({1.0, 0.0, 0.0}));
    CHECK(hedge.log_weight(a) == doctest::Approx(-0.5));
    CHECK(hedge.log_weight(b) == doctest::Approx(0.0));
    CHECK(hedge.log_weight(c) == doctest::Approx(0.0));
  }

  SUBCASE("a never-awake action keeps its share of the total weight") {
    SleepingHedge hedge(inst, {.loss_lo = 0, .loss_hi = 1, .horizon = 10, .eta = 0.7, .seed = 1});
    const SleepingSet sleeping{Label::anonymous(2)};  // c sleeps forever
    const double share_before = hedge.log_weight(c) - hedge.total_log_weight();
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
      hedge.step(sleeping);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      hedge.feed(losses_of({unit(rng), unit(rng), unit(rng)}));
      const double share = hedge.log_weight(c) - hedge.total_log_weight();
      CHECK(share == doctest::Approx(share_before).epsilon(1e-9));
    }
  }
}

TEST_CASE("random learner is reproducible for a fixed seed") {
  KSubsetsInstance inst(2, anon_ground(5));
  RandomAwake first(inst, 123);
  RandomAwake second(inst, 123);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    SleepingSet s;
    for (int i = 0; i < 5; ++i)
      if (rng() % 3 == 0) s.insert(Label::anonymous(i));
    auto x = first.step(s);
    auto y = second.step(s);
    CHECK(x == y);
  }
}

TEST_CASE("hedge per-action regret grows sublinearly") {
  // Sleeping-experts games at doubling horizons; the fitted growth exponent
  // of the worst per-action regret stays well below linear.
  std::vector<double> log_t, log_r;
  for (int exp = 3; exp <= 12; ++exp) {
    const int horizon = 1 << exp;
    double sum_worst = 0.0;
    const int seeds = 3;
    for (int seed = 0; seed < seeds; ++seed) {
      KSubsetsInstance inst(1, anon_ground(5));
      IidAdversary adv(inst, {.sleep_prob = 0.3, .loss_lo = 0.0, .loss_hi = 1.0,
                              .denominator = 16,
                              .seed = static_cast<std::uint64_t>(1000 * exp + seed)});
      SleepingHedge hedge(inst, {.loss_lo = 0.0, .loss_hi = 1.0, .horizon = horizon, .eta = {},
                                 .seed = static_cast<std::uint64_t>(seed + 1)});
      GameHistory h = run_game(inst, adv, hedge, horizon);
      double worst = 0.0;
      for (const Action& v : inst.enumerate()) worst = std::max(worst, per_action_regret(h, v));
      sum_worst += worst;
    }
    log_t.push_back(std::log(static_cast<double>(horizon)));
    log_r.push_back(std::log(std::max(1.0, sum_worst / seeds)));
  }
  // Least-squares slope.
  const std::size_t n = log_t.size();
  double mt = 0.0, mr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mt += log_t[i];
    mr += log_r[i];
  }
  mt /= n;
  mr /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (log_t[i] - mt) * (log_r[i] - mr);
    den += (log_t[i] - mt) * (log_t[i] - mt);
  }
  const double slope = num / den;
  CHECK(slope < 0.8);
}

TEST_CASE("learner factory") {
  KSubsetsInstance inst(1, anon_ground(3));
  CHECK(make_learner({.kind = "random", .seed = 1, .hedge = {}, .cap = kDefaultEnumCap}, inst) !=
        nullptr);
  CHECK(make_learner({.kind = "ftl", .seed = 1, .hedge = {}, .cap = kDefaultEnumCap}, inst) !=
        nullptr);
  LearnerSpec hedge{.kind = "hedge", .seed = 1,
                    .hedge = {.loss_lo = 0, .loss_hi = 1, .horizon = 16, .eta = {}, .seed = 0},
                    .cap = kDefaultEnumCap};
  CHECK(make_learner(hedge, inst) != nullptr);
  CHECK_THROWS_AS(make_learner({.kind = "bogus", .seed = 0, .hedge = {}, .cap = 1}, inst),
                  FormatError);
}
