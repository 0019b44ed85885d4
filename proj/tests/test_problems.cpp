#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"
#include "test_util.hpp"

using namespace sleepcomb;
using namespace sleepcomb::testutil;

namespace {

Label tag(int i, Tag t) { return Label::tagged(i, t); }
const Label F = Label::false_elem();
const Label T_ = Label::true_elem();

Graph chain_graph_n1(bool directed) {
  Graph g;
  g.directed = directed;
  g.add_edge(0, 1, tag(1, Tag::Zero));
  g.add_edge(0, 1, tag(1, Tag::One));
  g.add_edge(0, 1, tag(1, Tag::Star));
  g.add_edge(1, 2, F);
  g.add_edge(1, 2, T_);
  if (directed) {
    g.source = 0;
    g.sink = 2;
  }
  return g;
}

// The parallel-paths cut graph with one tagged branch, built by hand:
// branch 1 is (1,0),(1,1),(1,*) in series; branch 2 is F,T in series.
Graph cut_graph_n1() {
  Graph g;
  g.directed = true;
  g.source = 0;
  g.sink = 1;
  g.add_edge(0, 2, tag(1, Tag::Zero));
  g.add_edge(2, 3, tag(1, Tag::One));
  g.add_edge(3, 1, tag(1, Tag::Star));
  g.add_edge(0, 4, F);
  g.add_edge(4, 1, T_);
  return g;
}

}  // namespace

TEST_CASE("graph text round trip") {
  Graph g = cut_graph_n1();
  const std::string text = g.to_text();
  Graph parsed = Graph::from_text(text);
  CHECK(parsed.directed == g.directed);
  CHECK(parsed.source == g.source);
  CHECK(parsed.sink == g.sink);
  REQUIRE(parsed.edges.size() == g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(parsed.edges[i].u == g.edges[i].u);
    CHECK(parsed.edges[i].v == g.edges[i].v);
    CHECK(parsed.edges[i].label == g.edges[i].label);
  }
  CHECK_THROWS_AS(Graph::from_text("bogus\n"), FormatError);
}

TEST_CASE("contains per family") {
  SUBCASE("k-subsets membership is size-k") {
    std::vector<Label> ground;
    for (int i = 0; i < 4; ++i) ground.push_back(Label::anonymous(i));
    KSubsetsInstance inst(2, ground);
    CHECK(inst.contains(Action{Label::anonymous(0), Label::anonymous(1)}));
    CHECK_FALSE(inst.contains(Action{Label::anonymous(0)}));
  }

  SUBCASE("shortest path membership on the chain graph") {
    ShortestPathInstance inst(chain_graph_n1(true));
    CHECK(inst.contains(Action{tag(1, Tag::Zero), T_}));
    CHECK(inst.contains(Action{tag(1, Tag::Star), F}));
    CHECK_FALSE(inst.contains(Action{tag(1, Tag::Zero), tag(1, Tag::One)}));
    CHECK_FALSE(inst.contains(Action{T_}));
    CHECK_FALSE(inst.contains(Action{}));
  }

  SUBCASE("min cut membership on the parallel-paths graph") {
    MinCutInstance inst(cut_graph_n1());
    // Removing one edge leaves the other branch intact.
    CHECK_FALSE(inst.contains(Action{tag(1, Tag::Zero)}));
    CHECK(inst.contains(Action{tag(1, Tag::Zero), F}));
    CHECK(inst.contains(Action{tag(1, Tag::One), T_}));
    // Non-minimal disconnecting sets are members too.
    CHECK(inst.contains(Action{tag(1, Tag::Zero), tag(1, Tag::One), F}));
  }

  SUBCASE("maximal matching membership") {
    Graph g;
    g.directed = false;
    g.add_edge(0, 1, tag(1, Tag::Zero));
    g.add_edge(0, 1, tag(1, Tag::One));
    g.add_edge(2, 3, F);
    BipartiteMatchingInstance inst(g);
    CHECK(inst.contains(Action{tag(1, Tag::Zero), F}));
    CHECK_FALSE(inst.contains(Action{tag(1, Tag::Zero)}));               // not maximal
    CHECK_FALSE(inst.contains(Action{tag(1, Tag::Zero), tag(1, Tag::One)}));  // not a matching
  }

  SUBCASE("spanning tree membership") {
    SpanningTreeInstance inst(chain_graph_n1(false));
    CHECK(inst.contains(Action{tag(1, Tag::Zero), F}));
    CHECK_FALSE(inst.contains(Action{tag(1, Tag::Zero), tag(1, Tag::One)}));  // cycle, misses v2
  }
}

TEST_CASE("enumerate per family") {
  SUBCASE("k-subsets of a five-element ground set") {
    std::vector<Label> ground;
    for (int i = 0; i < 5; ++i) ground.push_back(Label::anonymous(i));
    KSubsetsInstance inst(2, ground);
    CHECK(inst.enumerate().size() == 10);  // C(5,2)
  }

  SUBCASE("six paths through the chain graph") {
    ShortestPathInstance inst(chain_graph_n1(true));
    auto actions = inst.enumerate();
    CHECK(actions.size() == 6);
    CHECK(std::is_sorted(actions.begin(), actions.end()));
    for (const Action& a : actions) CHECK(inst.contains(a));
  }

  SUBCASE("single-edge graph has one spanning tree") {
    Graph g;
    g.directed = false;
    g.add_edge(0, 1, Label::anonymous(0));
    SpanningTreeInstance inst(g);
    auto actions = inst.enumerate();
    REQUIRE(actions.size() == 1);
    CHECK(actions[0] == Action{Label::anonymous(0)});
  }

  SUBCASE("enumeration cap throws TooLarge") {
    std::vector<Label> ground;
    for (int i = 0; i < 20; ++i) ground.push_back(Label::anonymous(i));
    KSubsetsInstance inst(10, ground);
    CHECK_THROWS_AS(inst.enumerate(1000), TooLarge);  // C(20,10) = 184756
  }

  SUBCASE("truncated permutations count") {
    auto inst = TruncatedPermInstance::make_anonymous(2, 4);
    CHECK(inst.enumerate().size() == 12);  // 4 * 3
  }
}

TEST_CASE("min_loss_awake basics") {
  SUBCASE("all-zero losses give value zero") {
    std::mt19937_64 rng(99);
    for (Family f : all_families()) {
      auto [inst, lo, hi] = random_problem(f, rng);
      LossFunction l(LossRange::UnitInterval);
      for (const Label& e : inst->ground()) l.set(e, 0.0);
      auto got = inst->min_loss_awake(SleepingSet{}, l);
      REQUIRE(got.has_value());
      CHECK(got->value == 0.0);
      CHECK(inst->contains(got->action));
    }
  }

  SUBCASE("two smallest of four") {
    std::vector<Label> ground;
    for (int i = 0; i < 4; ++i) ground.push_back(Label::anonymous(i));
    KSubsetsInstance inst(2, ground);
    LossFunction l(LossRange::UnitInterval);
    l.set(Label::anonymous(0), 0.1);
    l.set(Label::anonymous(1), 0.2);
    l.set(Label::anonymous(2), 0.3);
    l.set(Label::anonymous(3), 0.4);
    auto got = inst.min_loss_awake(SleepingSet{}, l);
    REQUIRE(got.has_value());
    CHECK(got->value == doctest::Approx(0.3));
  }

  SUBCASE("negative losses on a cyclic shortest-path instance are rejected") {
    Graph g;
    g.directed = true;
    g.add_edge(0, 1, Label::anonymous(0));
    g.add_edge(1, 0, Label::anonymous(1));
    g.add_edge(1, 2, Label::anonymous(2));
    g.source = 0;
    g.sink = 2;
    ShortestPathInstance inst(g);
    LossFunction l(LossRange::SignedUnit);
    for (const Label& e : inst.ground()) l.set(e, -0.5);
    CHECK_THROWS_AS(inst.min_loss_awake(SleepingSet{}, l), UnsupportedLossRange);
  }

  SUBCASE("negative losses on a min-cut instance are rejected") {
    MinCutInstance inst(cut_graph_n1());
    LossFunction l(LossRange::SignedUnit);
    for (const Label& e : inst.ground()) l.set(e, -0.25);
    CHECK_THROWS_AS(inst.min_loss_awake(SleepingSet{}, l), UnsupportedLossRange);
  }
}

TEST_CASE("solver matches the enumeration oracle on random instances") {
  // Dyadic losses keep every comparison exact.
  for (Family family : all_families()) {
    CAPTURE(family_name(family));
    std::mt19937_64 rng(0xC0FFEE ^ static_cast<std::uint64_t>(family));
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto [inst, lo, hi] = random_problem(family, rng);
      const SleepingSet sleeping = random_sleeping(*inst, 0.3, rng);
      const LossFunction losses = random_dyadic_losses(*inst, lo, hi, rng);

      const auto got = inst->min_loss_awake(sleeping, losses);
      const auto awake = inst->enumerate_awake(sleeping);

      if (awake.empty()) {
        CHECK_FALSE(got.has_value());
        continue;
      }
      double best = action_loss(awake[0], losses);
      for (const Action& a : awake) best = std::min(best, action_loss(a, losses));
      REQUIRE_MESSAGE(got.has_value(), "solver found nothing but oracle has ",
                      awake.size(), " actions");
      CHECK(got->value == best);
      CHECK(action_loss(got->action, losses) == got->value);
      CHECK(inst->contains(got->action));
      CHECK_FALSE(got->action.intersects(sleeping));
      ++checked;
    }
    CHECK(checked > 30);  // most trials should be feasible
  }
}

TEST_CASE("contains agrees with enumeration membership") {
  std::mt19937_64 rng(7);
  for (Family family : all_families()) {
    for (int trial = 0; trial < 10; ++trial) {
      auto [inst, lo, hi] = random_problem(family, rng);
      const auto all = inst->enumerate();
      for (const Action& a : all) CHECK(inst->contains(a));
      // Random ground subsets are members exactly when enumerated.
      for (int probe = 0; probe < 20; ++probe) {
        std::vector<Label> pick;
        for (const Label& l : inst->ground())
          if (rand_coin(rng, 0.4)) pick.push_back(l);
        Action cand(pick);
        const bool member = std::binary_search(all.begin(), all.end(), cand);
        CHECK(inst->contains(cand) == member);
      }
    }
  }
}

TEST_CASE("awake enumeration honors the sleeping set") {
  std::mt19937_64 rng(21);
  for (Family family : all_families()) {
    auto [inst, lo, hi] = random_problem(family, rng);
    const SleepingSet sleeping = random_sleeping(*inst, 0.4, rng);
    const auto awake = inst->enumerate_awake(sleeping);
    const auto all = inst->enumerate();
    for (const Action& a : awake) {
      CHECK_FALSE(a.intersects(sleeping));
      CHECK(std::binary_search(all.begin(), all.end(), a));
    }
    // Everything awake in the full list appears in the awake list.
    for (const Action& a : all)
      if (!a.intersects(sleeping)) CHECK(std::binary_search(awake.begin(), awake.end(), a));
  }
}
