#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/learners.hpp"
#include "sleepcomb/problems.hpp"
#include "sleepcomb/reductions.hpp"

using namespace sleepcomb;

namespace {

Label tag(int i, Tag t) { return Label::tagged(i, t); }
const Label F = Label::false_elem();
const Label T_ = Label::true_elem();

std::vector<Label> anon_ground(int d) {
  std::vector<Label> g;
  for (int i = 0; i < d; ++i) g.push_back(Label::anonymous(i));
  return g;
}

long long unit_action_loss(const Action& v, int y, int n) {
  long long total = 0;
  for (const Label& e : v) total += disj_unit_loss(e, y, n);
  return total;
}

}  // namespace

TEST_CASE("bit patterns") {
  SUBCASE("bits_for_horizon") {
    CHECK(bits_for_horizon(1) == 1);
    CHECK(bits_for_horizon(2) == 1);
    CHECK(bits_for_horizon(8) == 3);
    CHECK(bits_for_horizon(9) == 4);
    CHECK(bits_for_horizon(64) == 6);
  }

  SUBCASE("deterministic patterns are the lsb-first encodings of t-1 and distinct") {
    BitPatternSource src(BitPatternSource::Mode::Deterministic, 8, 2, 0);
    CHECK(src.p() == 3);
    CHECK(src.next() == std::vector<int>{0, 0, 0});
    CHECK(src.next() == std::vector<int>{1, 0, 0});
    CHECK(src.next() == std::vector<int>{0, 1, 0});
    std::set<std::vector<int>> seen{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    for (int t = 3; t < 8; ++t) CHECK(seen.insert(src.next()).second);
    CHECK_THROWS_AS(src.next(), ProtocolViolation);
  }

  SUBCASE("stochastic mode widens p and logs draws") {
    BitPatternSource src(BitPatternSource::Mode::StochasticIid, 64, 2, 7);
    CHECK(src.p() == 12);
    for (int t = 0; t < 64; ++t) src.next();
    CHECK(src.log().size() == 64);
    BitPatternSource src3(BitPatternSource::Mode::StochasticIid, 64, 3, 7);
    CHECK(src3.p() == 18);
  }
}

TEST_CASE("per-action wrapper step mechanics") {
  // Anonymous base ground keeps the bit labels at tagged indices 1..p.
  auto base = std::make_shared<KSubsetsInstance>(1, anon_ground(2));
  PerActionWrapper::Config config{.horizon = 8,
                                  .mode = BitPatternSource::Mode::Deterministic,
                                  .p_multiplier = 2,
                                  .seed = 0,
                                  .cap = kDefaultEnumCap,
                                  .gadget = MinCutGadget::SeriesPair};
  PerActionWrapper wrapper(base, config, [](const Instance& derived) {
    return std::make_unique<FollowAwakeLeader>(derived);
  });

  SUBCASE("round one sleeps the complement of bits (0,0,0)") {
    auto played = wrapper.step(SleepingSet{});
    REQUIRE(played.has_value());
    const SleepingSet& derived_sleeping = wrapper.derived_history().rounds[0].sleeping;
    CHECK(derived_sleeping ==
          SleepingSet{tag(1, Tag::One), tag(2, Tag::One), tag(3, Tag::One)});
    // The inner action carries the three zero-bits plus a base element;
    // the projection strips the bits.
    const Action& inner = *wrapper.derived_history().rounds[0].played;
    CHECK(inner.size() == 4);
    CHECK(played->size() == 1);
    CHECK(played->subset_of(base->ground_set()));
    CHECK(wrapper.extended().project(inner) == *played);
  }

  SUBCASE("base awake nonempty implies derived awake nonempty") {
    for (int t = 0; t < 8; ++t) {
      SleepingSet sleeping = t % 2 ? SleepingSet{Label::anonymous(0)} : SleepingSet{};
      auto played = wrapper.step(sleeping);
      CHECK(played.has_value());  // base always has an awake singleton here
      LossFunction l(LossRange::UnitInterval);
      l.set(Label::anonymous(0), 0.5);
      l.set(Label::anonymous(1), 0.25);
      wrapper.feed(l);
    }
  }

  SUBCASE("empty base awake set forces a skip") {
    auto played = wrapper.step(SleepingSet{Label::anonymous(0), Label::anonymous(1)});
    CHECK_FALSE(played.has_value());
    CHECK(wrapper.derived_history().rounds[0].skipped());
  }
}

TEST_CASE("per-action wrapper losses") {
  auto base = std::make_shared<KSubsetsInstance>(1, anon_ground(2));
  PerActionWrapper::Config config{.horizon = 4,
                                  .mode = BitPatternSource::Mode::Deterministic,
                                  .p_multiplier = 2,
                                  .seed = 0,
                                  .cap = kDefaultEnumCap,
                                  .gadget = MinCutGadget::SeriesPair};
  PerActionWrapper wrapper(base, config, [](const Instance& derived) {
    return std::make_unique<FollowAwakeLeader>(derived);
  });

  SUBCASE("bit elements always receive zero loss") {
    for (int t = 0; t < 4; ++t) {
      wrapper.step(SleepingSet{});
      LossFunction l(LossRange::UnitInterval);
      l.set(Label::anonymous(0), 0.75);
      l.set(Label::anonymous(1), 0.5);
      wrapper.feed(l);
      const LossFunction& derived = wrapper.derived_history().rounds[t].losses;
      for (const Label& bit : wrapper.extended().bit_labels) CHECK(derived.at(bit) == 0.0);
      CHECK(derived.at(Label::anonymous(0)) == 0.75);
    }
  }

  SUBCASE("negative base losses are rejected") {
    wrapper.step(SleepingSet{});
    LossFunction l(LossRange::SignedUnit);
    l.set(Label::anonymous(0), -0.25);
    l.set(Label::anonymous(1), 0.5);
    CHECK_THROWS_AS(wrapper.feed(l), UnsupportedLossRange);
  }

  SUBCASE("base loss of the played action never exceeds the derived loss") {
    for (int t = 0; t < 4; ++t) {
      auto played = wrapper.step(SleepingSet{});
      REQUIRE(played.has_value());
      LossFunction l(LossRange::UnitInterval);
      l.set(Label::anonymous(0), 0.25 * (t + 1));
      l.set(Label::anonymous(1), 1.0 - 0.25 * t);
      wrapper.feed(l);
      const RoundRecord& derived_round = wrapper.derived_history().rounds[t];
      CHECK(action_loss(*played, l) <=
            action_loss(*derived_round.played, derived_round.losses) + 1e-12);
    }
  }
}

TEST_CASE("comparator ranking") {
  auto hard = build_hard(Family::KSubsets, 1);  // k=2 over 5 elements
  const int horizon = 8;
  PerActionWrapper::Config config{.horizon = horizon,
                                  .mode = BitPatternSource::Mode::Deterministic,
                                  .p_multiplier = 2,
                                  .seed = 3,
                                  .cap = kDefaultEnumCap,
                                  .gadget = MinCutGadget::SeriesPair};
  PerActionWrapper wrapper(hard.instance, config, [](const Instance& derived) {
    return std::make_unique<RandomAwake>(derived, 11);
  });
  IidAdversary adversary(*hard.instance,
                         {.sleep_prob = 0.25, .loss_lo = 0.0, .loss_hi = 1.0, .denominator = 8,
                          .seed = 21});
  GameHistory base_history = run_game(*hard.instance, adversary, wrapper, horizon);
  const ExtendedInstance& ext = wrapper.extended();

  for (const Action& comparator : hard.instance->enumerate()) {
    const Ranking ranking =
        build_comparator_ranking(ext, wrapper.patterns(), base_history, comparator);

    // Replay: the t-th entry is the top-ranked awake derived action.
    std::size_t entry = 0;
    for (std::size_t t = 0; t < base_history.rounds.size(); ++t) {
      const RoundRecord& round = base_history.rounds[t];
      if (hard.instance->enumerate_awake(round.sleeping).empty()) continue;
      const RoundRecord& derived_round = wrapper.derived_history().rounds[t];
      const auto derived_awake = ext.derived->enumerate_awake(derived_round.sleeping);
      REQUIRE(entry < ranking.prefix.size());
      CHECK(top_awake(derived_awake, ranking) == ranking.prefix[entry]);
      ++entry;
    }

    // The regret chain: per-action regret on the base side is bounded by
    // the inner ranking regret against the comparator ranking.
    const double pa = per_action_regret(base_history, comparator);
    const double rr = ranking_regret(*ext.derived, wrapper.derived_history(), ranking);
    CHECK(pa <= rr + 1e-9);
  }

  SUBCASE("comparator awake everywhere: ranking loss equals its total loss") {
    GameHistory always_awake;
    LossFunction l(LossRange::UnitInterval);
    for (const Label& e : hard.instance->ground()) l.set(e, 0.25);
    for (int t = 0; t < 4; ++t)
      always_awake.rounds.push_back(
          RoundRecord{SleepingSet{}, Action{tag(1, Tag::Zero), tag(1, Tag::One)}, l});
    BitPatternSource pats(BitPatternSource::Mode::Deterministic, 4, 2, 0);
    std::vector<std::vector<int>> logged;
    for (int t = 0; t < 4; ++t) logged.push_back(pats.next());
    const Action comparator{F, T_};
    const Ranking ranking = build_comparator_ranking(ext, logged, always_awake, comparator);
    // Each entry joins the round's bits with the comparator; bits cost 0.
    for (const Action& entry : ranking.prefix) CHECK(ext.project(entry) == comparator);
  }
}

TEST_CASE("disjunction reduction round mechanics") {
  SUBCASE("sleeping set complements the input bits") {
    CHECK(DisjunctionLearner::sleeping_for_input({1, 0}) ==
          SleepingSet{tag(1, Tag::Zero), tag(2, Tag::One)});
    CHECK(DisjunctionLearner::sleeping_for_input({0, 0, 1}) ==
          SleepingSet{tag(1, Tag::One), tag(2, Tag::One), tag(3, Tag::Zero)});
  }

  SUBCASE("loss assignment for n=3 matches the two-branch formula") {
    HardInstance hard = build_hard(Family::KSubsets, 3);
    const SleepingSet sleeping = DisjunctionLearner::sleeping_for_input({1, 1, 1});
    LossFunction y1 = DisjunctionLearner::round_losses(hard, sleeping, 1);
    CHECK(y1.at(F) == 1.0);
    CHECK(y1.at(T_) == 0.0);
    CHECK(y1.at(tag(1, Tag::One)) == 0.0);
    CHECK_FALSE(y1.defined(tag(1, Tag::Zero)));  // sleeping elements get nothing

    LossFunction y0 = DisjunctionLearner::round_losses(hard, sleeping, 0);
    CHECK(y0.at(F) == -0.75);
    CHECK(y0.at(tag(2, Tag::Star)) == 0.25);
    CHECK(y0.at(T_) == 0.25);
  }

  SUBCASE("full-size actions cost exactly the prediction error") {
    // Any action with n+1 elements: loss 1[y != yhat] where yhat tracks F.
    const int n = 3;
    for (int y : {0, 1}) {
      const Action with_f{tag(1, Tag::Zero), tag(2, Tag::Star), tag(3, Tag::One), F};
      const Action without_f{tag(1, Tag::Zero), tag(2, Tag::Star), tag(3, Tag::One), T_};
      CHECK(unit_action_loss(with_f, y, n) == (n + 1) * (y == 1 ? 1 : 0));   // yhat = 0
      CHECK(unit_action_loss(without_f, y, n) == (n + 1) * (y == 0 ? 1 : 0));  // yhat = 1
    }
  }

  SUBCASE("prediction is the F-indicator") {
    HardInstance hard = build_hard(Family::KSubsets, 2);
    DisjunctionLearner learner(hard, std::make_unique<FollowAwakeLeader>(*hard.instance));
    const int yhat = learner.predict({1, 0});
    const Action& played = learner.rounds()[0].played;
    CHECK(yhat == (played.contains(F) ? 0 : 1));
    learner.update(1);
  }
}

TEST_CASE("disjunction action sets") {
  SUBCASE("a single positive literal over two variables") {
    const Disjunction phi{{1}, {}};
    const auto dphi = build_dphi(phi, 2);
    REQUIRE(dphi.size() == 2);
    CHECK(dphi[0] == Action{tag(1, Tag::One), tag(2, Tag::Star), T_});
    CHECK(dphi[1] == Action{tag(1, Tag::Zero), tag(2, Tag::Star), F});
  }

  SUBCASE("the empty disjunction yields a single all-stars F action") {
    const auto dphi = build_dphi(Disjunction{}, 2);
    REQUIRE(dphi.size() == 1);
    CHECK(dphi[0] == Action{tag(1, Tag::Star), tag(2, Tag::Star), F});
  }

  SUBCASE("every member has n+1 elements and is rich in every hard family") {
    for (int n = 1; n <= 3; ++n) {
      HardInstance ks = build_hard(Family::KSubsets, n);
      HardInstance sp = build_hard(Family::ShortestPath, n);
      for (const Disjunction& phi : enumerate_disjunctions(n)) {
        for (const Action& v : build_dphi(phi, n)) {
          CHECK(v.size() == static_cast<std::size_t>(n) + 1);
          CHECK(ks.instance->contains(v));
          CHECK(sp.instance->contains(v));
        }
      }
    }
  }

  SUBCASE("unique awake member tracks the disjunction value") {
    const Disjunction phi{{1}, {}};
    auto [v1, has_t1] = verify_dphi_round(phi, {1, 0}, 2);
    CHECK(has_t1);
    CHECK(v1 == Action{tag(1, Tag::One), tag(2, Tag::Star), T_});
    auto [v2, has_t2] = verify_dphi_round(phi, {0, 1}, 2);
    CHECK_FALSE(has_t2);
    CHECK(v2 == Action{tag(1, Tag::Zero), tag(2, Tag::Star), F});
  }

  SUBCASE("exhaustive uniqueness and consistency for n up to 3") {
    for (int n = 1; n <= 3; ++n) {
      for (const Disjunction& phi : enumerate_disjunctions(n)) {
        for (int mask = 0; mask < (1 << n); ++mask) {
          std::vector<int> x(n);
          for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
          CHECK_NOTHROW(verify_dphi_round(phi, x, n));
        }
      }
    }
  }
}

TEST_CASE("the disjunction regret chain holds exactly") {
  const int n = 2;
  HardInstance hard = build_hard(Family::KSubsets, n);
  DisjunctionLearner learner(hard, std::make_unique<RandomAwake>(*hard.instance, 77));
  const LabeledStream stream = make_iid_stream(Disjunction{{2}, {}}, n, 150, 0.15, 41);
  for (const StreamRound& r : stream) {
    learner.predict(r.x);
    learner.update(r.y);
  }

  // Per-round: unit loss of the played action is at least (n+1) times the
  // mistake indicator, with equality since k-subset actions have n+1
  // elements.
  long long alg_mistakes = 0;
  for (std::size_t t = 0; t < stream.size(); ++t) {
    const auto& round = learner.rounds()[t];
    const long long units = unit_action_loss(round.played, round.label, n);
    const long long indicator = round.predicted != round.label ? 1 : 0;
    alg_mistakes += indicator;
    CHECK(units >= (n + 1) * indicator);
    CHECK(units == (n + 1) * indicator);  // |V| = n+1 on k-subsets
    // Double path agrees with the exact units.
    const RoundRecord& record = learner.inner_history().rounds[t];
    CHECK(action_loss(round.played, record.losses) ==
          doctest::Approx(static_cast<double>(units) / (n + 1)).epsilon(1e-9));
  }

  for (const Disjunction& phi : enumerate_disjunctions(n)) {
    const auto dphi = build_dphi(phi, n);

    // Exactly one awake member per round; its unit loss equals the
    // disjunction's mistake indicator.
    long long phi_mistakes = 0;
    long long awake_units = 0;
    for (std::size_t t = 0; t < stream.size(); ++t) {
      const auto& round = learner.rounds()[t];
      const SleepingSet sleeping = DisjunctionLearner::sleeping_for_input(round.x);
      int awake_count = 0;
      for (const Action& v : dphi) {
        if (v.intersects(sleeping)) continue;
        ++awake_count;
        awake_units += unit_action_loss(v, round.label, n);
      }
      CHECK(awake_count == 1);
      phi_mistakes += (phi.eval(round.x) ? 1 : 0) != round.label ? 1 : 0;
    }
    CHECK(awake_units == (n + 1) * phi_mistakes);

    // Regret chain in units: (n+1) * Regret_disj(phi) <= sum of unit
    // per-action regrets over the disjunction's action set.
    long long chain_units = 0;
    for (const Action& v : dphi) {
      for (std::size_t t = 0; t < stream.size(); ++t) {
        const auto& round = learner.rounds()[t];
        const SleepingSet sleeping = DisjunctionLearner::sleeping_for_input(round.x);
        if (v.intersects(sleeping)) continue;
        chain_units += unit_action_loss(round.played, round.label, n) -
                       unit_action_loss(v, round.label, n);
      }
      // The exact units agree with the double-valued ledger.
      double ledger = per_action_regret(learner.inner_history(), v);
      double exact = 0.0;
      for (std::size_t t = 0; t < stream.size(); ++t) {
        const auto& round = learner.rounds()[t];
        const SleepingSet sleeping = DisjunctionLearner::sleeping_for_input(round.x);
        if (v.intersects(sleeping)) continue;
        exact += static_cast<double>(unit_action_loss(round.played, round.label, n) -
                                     unit_action_loss(v, round.label, n)) /
                 (n + 1);
      }
      CHECK(ledger == doctest::Approx(exact).epsilon(1e-9));
    }
    CHECK((n + 1) * (alg_mistakes - phi_mistakes) <= chain_units);
  }
}

TEST_CASE("disjunction reduction over other hard families") {
  // The learner is family-agnostic; spot check the matching instance.
  HardInstance hard = build_hard(Family::BipartiteMatching, 2);
  DisjunctionLearner learner(hard, std::make_unique<FollowAwakeLeader>(*hard.instance));
  const LabeledStream stream = make_iid_stream(Disjunction{{1}, {}}, 2, 60, 0.0, 13);
  long long mistakes = 0;
  for (const StreamRound& r : stream) {
    const int yhat = learner.predict(r.x);
    learner.update(r.y);
    if (yhat != r.y) ++mistakes;
  }
  // Every matching here has exactly n+1 elements, so losses equal mistake
  // indicators; the follow-the-leader inner should learn the target.
  long long replay = 0;
  for (std::size_t t = 0; t < stream.size(); ++t) {
    const auto& round = learner.rounds()[t];
    CHECK(unit_action_loss(round.played, round.label, 2) ==
          3 * (round.predicted != round.label ? 1 : 0));
    replay += round.predicted != round.label ? 1 : 0;
  }
  CHECK(replay == mistakes);
}
