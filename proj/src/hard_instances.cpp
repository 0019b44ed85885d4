#include "sleepcomb/hard_instances.hpp"

#include <memory>
#include <random>

#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

namespace {

std::vector<Label> special_labels(int n) {
  std::vector<Label> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(Label::tagged(i, Tag::Zero));
    out.push_back(Label::tagged(i, Tag::One));
    out.push_back(Label::tagged(i, Tag::Star));
  }
  out.push_back(Label::false_elem());
  out.push_back(Label::true_elem());
  return out;
}

Graph chain_graph(int n, bool directed) {
  Graph g;
  g.directed = directed;
  for (int i = 1; i <= n; ++i) {
    g.add_edge(i - 1, i, Label::tagged(i, Tag::Zero));
    g.add_edge(i - 1, i, Label::tagged(i, Tag::One));
    g.add_edge(i - 1, i, Label::tagged(i, Tag::Star));
  }
  g.add_edge(n, n + 1, Label::false_elem());
  g.add_edge(n, n + 1, Label::true_elem());
  if (directed) {
    g.source = 0;
    g.sink = n + 1;
  }
  return g;
}

}  // namespace

HardInstance build_hard(Family family, int n) {
  if (n < 1) throw FormatError("hard instance parameter n must be >= 1");
  HardInstance hi;
  hi.n = n;
  hi.special = LabelSet(special_labels(n));
  switch (family) {
    case Family::ShortestPath:
      hi.instance = std::make_shared<ShortestPathInstance>(chain_graph(n, true));
      break;
    case Family::SpanningTree:
      hi.instance = std::make_shared<SpanningTreeInstance>(chain_graph(n, false));
      break;
    case Family::KSubsets:
      hi.instance = std::make_shared<KSubsetsInstance>(n + 1, special_labels(n));
      break;
    case Family::TruncatedPerm: {
      // Left nodes u_1..u_{n+1}; right nodes ordered v_{1,0}, v_{1,1},
      // v_{1,*}, ..., v_{n,*}, v_F, v_T. Row i <= n has its three special
      // edges at columns 3(i-1)..3(i-1)+2; the last row has F and T at the
      // final two columns. Everything else is anonymous.
      const int k = n + 1;
      const int m = 3 * n + 2;
      std::vector<std::vector<Label>> labels(k, std::vector<Label>(m));
      int anon = 0;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i < n && j / 3 == i) {
            const Tag tag = j % 3 == 0 ? Tag::Zero : j % 3 == 1 ? Tag::One : Tag::Star;
            labels[i][j] = Label::tagged(i + 1, tag);
          } else if (i == n && j == m - 2) {
            labels[i][j] = Label::false_elem();
          } else if (i == n && j == m - 1) {
            labels[i][j] = Label::true_elem();
          } else {
            labels[i][j] = Label::anonymous(anon++);
          }
        }
      }
      hi.instance = std::make_shared<TruncatedPermInstance>(k, m, std::move(labels));
      break;
    }
    case Family::BipartiteMatching: {
      Graph g;
      g.directed = false;
      for (int i = 1; i <= n; ++i) {
        g.add_edge(2 * (i - 1), 2 * (i - 1) + 1, Label::tagged(i, Tag::Zero));
        g.add_edge(2 * (i - 1), 2 * (i - 1) + 1, Label::tagged(i, Tag::One));
        g.add_edge(2 * (i - 1), 2 * (i - 1) + 1, Label::tagged(i, Tag::Star));
      }
      g.add_edge(2 * n, 2 * n + 1, Label::false_elem());
      g.add_edge(2 * n, 2 * n + 1, Label::true_elem());
      hi.instance = std::make_shared<BipartiteMatchingInstance>(g);
      break;
    }
    case Family::MinCut: {
      // n+1 internally disjoint s-t paths in parallel; breaking every path
      // requires at least one edge per path.
      Graph g;
      g.directed = true;
      g.source = 0;
      g.sink = 1;
      int next = 2;
      for (int i = 1; i <= n; ++i) {
        const int a = next++;
        const int b = next++;
        g.add_edge(0, a, Label::tagged(i, Tag::Zero));
        g.add_edge(a, b, Label::tagged(i, Tag::One));
        g.add_edge(b, 1, Label::tagged(i, Tag::Star));
      }
      const int z = next++;
      g.add_edge(0, z, Label::false_elem());
      g.add_edge(z, 1, Label::true_elem());
      hi.instance = std::make_shared<MinCutInstance>(g);
      break;
    }
  }
  return hi;
}

Action pattern_action(const std::vector<int>& signs, bool terminal_true) {
  std::vector<Label> labels;
  labels.reserve(signs.size() + 1);
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const Tag tag = signs[i] == 0 ? Tag::Zero : signs[i] == 1 ? Tag::One : Tag::Star;
    labels.push_back(Label::tagged(static_cast<int>(i) + 1, tag));
  }
  labels.push_back(terminal_true ? Label::true_elem() : Label::false_elem());
  return Action(std::move(labels));
}

VerifyReport verify_heaviness(const HardInstance& hi, std::size_t cap, std::size_t sample_budget,
                              std::uint64_t seed) {
  VerifyReport report;
  report.detail = "heaviness";
  const std::size_t need = static_cast<std::size_t>(hi.n) + 1;
  try {
    for (const Action& v : hi.instance->enumerate(cap)) {
      ++report.checked;
      if (v.size() < need) {
        report.ok = false;
        report.counterexample = v;
        report.detail = "action with " + std::to_string(v.size()) + " elements";
        return report;
      }
    }
    return report;
  } catch (const TooLarge&) {
    // Spot checks: random losses make min_loss_awake a cheap sampler of
    // decision-set members.
    report.exhaustive = false;
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
    std::uniform_int_distribution<int> quant(0, 64);
    for (std::size_t trial = 0; trial < sample_budget; ++trial) {
      LossFunction losses(LossRange::UnitInterval);
      for (const Label& e : hi.instance->ground()) losses.set(e, quant(rng) / 64.0);
      const auto got = hi.instance->min_loss_awake(SleepingSet{}, losses);
      if (!got) continue;
      ++report.checked;
      if (got->action.size() < need) {
        report.ok = false;
        report.counterexample = got->action;
        report.detail = "sampled action with " + std::to_string(got->action.size()) + " elements";
        return report;
      }
    }
    return report;
  }
}

VerifyReport verify_richness(const HardInstance& hi) {
  VerifyReport report;
  report.detail = "richness";
  if (hi.n > 8) throw TooLarge("richness check limited to n <= 8");
  std::vector<int> signs(hi.n, 0);
  while (true) {
    for (int terminal = 0; terminal < 2; ++terminal) {
      const Action v = pattern_action(signs, terminal == 1);
      ++report.checked;
      if (!v.subset_of(hi.instance->ground_set()) || !hi.instance->contains(v)) {
        report.ok = false;
        report.counterexample = v;
        report.detail = "pattern selects a non-member";
        return report;
      }
    }
    int pos = 0;
    while (pos < hi.n && signs[pos] == 2) signs[pos++] = 0;
    if (pos == hi.n) break;
    ++signs[pos];
  }
  return report;
}

}  // namespace sleepcomb
